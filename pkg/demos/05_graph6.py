"""graph6 and sparse6 round trips, and what malformed input looks like."""
from harmpoly import parse_graph6, parse_sparse6, write_graph6, write_sparse6
from harmpoly.families import hypercube, path_graph
from harmpoly.formats import FormatError

for g in (path_graph(4), hypercube(3)):
    g6, s6 = write_graph6(g), write_sparse6(g)
    print(f"n={g.n:<2} m={g.m:<2} graph6={g6:<10} sparse6={s6}")
    assert parse_graph6(g6) == g and parse_sparse6(s6) == g

for bad in ["A_?", "D?", "B w"]:
    try:
        parse_graph6(bad)
    except FormatError as exc:
        print(f"{bad!r}: {exc}")
