"""Non-isomorphic graphs sharing a harmonic polynomial also share every index
that depends on the degree sums edge by edge."""
from harmpoly import mine_collisions
from harmpoly.formats import write_graph6

pairs = mine_collisions(5)
for p in pairs:
    print(f"{write_graph6(p.first):<6} {write_graph6(p.second):<6} H = {p.polynomial}")
    for check in p.checks[:4]:
        print("    ", check)
print(f"{len(pairs)} pairs; all agree: {all(p.ok for p in pairs)}")
