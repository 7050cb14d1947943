"""King stability for the quiver with two vertices and three arrows.

A representation is a triple of d2 x d1 matrices.  The Euler form is
<a,b> = a1 b1 + a2 b2 - 3 a1 b2, and the stability character is
theta(d) = 5(d1 - d2), the pairing against the fixed dimension vector
(5, 10).  Over a small prime field the subspace lattice is finite, so
(semi)stability is decided by exhaustive enumeration with an explicit
witness, and the expected moduli dimension 1 - <d,d> = r^2 + 1 at
d = (r,r) can be compared against sampled verdicts.

Run:  python demos/04_quiver_stability.py
"""

from collections import Counter

from fanov5 import check_stability, euler_form, hom_ext, moduli_dim, random_rep, theta
from fanov5.linalg import PrimeField
from fanov5.quiver import direct_sum, make_rep, zero_rep


def main():
    print("== Euler form and moduli dimensions ==")
    for r in range(1, 6):
        d = (r, r)
        print(f"  d = {d}: <d,d> = {euler_form(d, d)}, theta = {theta(d)},"
              f" moduli dimension = {moduli_dim(d)}")
    print()

    F2 = PrimeField(2)

    print("== Hand-picked verdicts over F_2 ==")
    cases = {
        "zero maps, d=(1,1)": zero_rep(F2, (1, 1)),
        "maps (1,0,0), d=(1,1)": make_rep(F2, (1, 1), [[1]], [[0]], [[0]]),
        "sum of two stables, d=(2,2)": direct_sum(
            make_rep(F2, (1, 1), [[1]], [[0]], [[0]]),
            make_rep(F2, (1, 1), [[0]], [[1]], [[0]]),
        ),
    }
    for label, rep in cases.items():
        verdict = check_stability(rep)
        line = f"  {label}: {verdict.status.value}"
        if verdict.witness:
            w = verdict.witness
            line += f"  (witness of dimension {w.dims} with theta = {w.theta})"
        print(line)
    print()

    print("== Sampled verdicts, d=(2,2) over F_2 ==")
    counts = Counter(
        check_stability(random_rep((2, 2), F2, seed)).status.value for seed in range(200)
    )
    for status, n in sorted(counts.items()):
        print(f"  {status}: {n} / 200")
    print()

    print("== Hom and Ext between random representations ==")
    F3 = PrimeField(3)
    for seed in range(5):
        a = random_rep((2, 2), F3, seed)
        b = random_rep((1, 2), F3, seed + 100)
        h, e = hom_ext(a, b)
        print(f"  seed {seed}: dim Hom = {h}, dim Ext1 = {e},"
              f" difference {h - e} = <(2,2),(1,2)> = {euler_form((2, 2), (1, 2))}")


if __name__ == "__main__":
    main()
