"""Named families against their closed forms, and the two sharpness constructions."""
from harmpoly import closed_form_polynomial, degree_summary, generate, harmonic_polynomial
from harmpoly.families import ClosedFormUnavailable, g_r_blocks, t_r_sequence

for spec in ["complete:5", "cycle:6", "hypercube:3", "kbip:2,4", "path:6", "wheel:7", "star:5"]:
    g = generate(spec)
    computed = harmonic_polynomial(g)
    closed = closed_form_polynomial(spec)
    print(f"{spec:<12} n={g.n:<3} {str(computed):<18} {'match' if computed == closed else 'MISMATCH'}")

# T_r: a tree using every degree 1..r, with only two terms in its polynomial
for r in range(3, 7):
    g = generate(f"trtree:{r}")
    try:
        closed_form_polynomial(f"trtree:{r}")
    except ClosedFormUnavailable as exc:
        shape = f"K={exc.nonzero_count}, exponents {exc.support}"
    print(f"T_{r}: degree order {t_r_sequence(r)}, n={g.n}, H = {harmonic_polynomial(g)}  ({shape})")

# G_r: complete bipartite blocks K_{i, r+1-i}; r distinct degrees, a single term
for r in range(1, 6):
    g = generate(f"grunion:{r}")
    print(f"G_{r}: blocks {g_r_blocks(r)}, degrees {sorted(degree_summary(g).distinct)}, "
          f"H = {harmonic_polynomial(g)}")
