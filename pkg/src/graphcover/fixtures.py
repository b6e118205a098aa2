"""The small graphs and coverings used throughout the tests and examples."""

from .covering import GraphMorphism, check_morphism, identity_morphism
from .graph import Graph


def loop_graph() -> Graph:
    """L1: one vertex ``u`` with one loop ``e``."""
    return Graph(["u"], [("e", "u", "u")])


def bouquet(*names) -> Graph:
    """One vertex ``u`` with a loop per name; ``bouquet("x", "y")`` is the figure-eight B2."""
    return Graph(["u"], [(n, "u", "u") for n in names])


def figure_eight() -> Graph:
    return bouquet("x", "y")


def cycle(n: int) -> Graph:
    """Cn: vertices ``0..n-1`` and edges ``ei: i -> i+1 mod n``."""
    return Graph([str(i) for i in range(n)], [(f"e{i}", str(i), str((i + 1) % n)) for i in range(n)])


def double_figure_eight() -> Graph:
    """D2: the connected double cover of B2."""
    return Graph(["0", "1"], [("x0", "0", "1"), ("x1", "1", "0"), ("y0", "0", "0"), ("y1", "1", "1")])


def cycle_over_loop(n: int) -> GraphMorphism:
    """The n-sheeted covering Cn -> L1."""
    C = cycle(n)
    return check_morphism({v: "u" for v in C.vertices}, {e: "e" for e in C.edge_ids}, C, loop_graph())


def double_over_figure_eight() -> GraphMorphism:
    D = double_figure_eight()
    return check_morphism({"0": "u", "1": "u"}, {"x0": "x", "x1": "x", "y0": "y", "y1": "y"},
                          D, figure_eight())


def fixture_coverings():
    """The four named coverings with their base vertices."""
    return [
        ("id_B2", identity_morphism(figure_eight()), "u"),
        ("C2->L1", cycle_over_loop(2), "0"),
        ("C3->L1", cycle_over_loop(3), "0"),
        ("D2->B2", double_over_figure_eight(), "0"),
    ]
