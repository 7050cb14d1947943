"""Cohomology of equivariant bundles on Gr(2,5), step by step.

The dominantization algorithm in action: take a bundle's defining weight,
add rho = (1,1,1,1), and push the result into the dominant chamber with
simple reflections.  Hitting a wall (a zero coefficient) kills every
cohomology group; reaching a strictly dominant weight leaves exactly one
group, in degree equal to the number of reflections used.

Run:  python demos/01_cohomology_on_the_grassmannian.py
"""

from fanov5 import catalog, cohomology, reflection_chain, rho, twist, weyl_dim


def show_chain(bundle):
    shifted = bundle.weight + rho(bundle.n)
    chain = reflection_chain(shifted)
    print(f"{bundle.describe()}: weight {bundle.weight.coeffs}, shifted {shifted.coeffs}")
    for step in chain.steps:
        print(f"    sigma_{step.reflection} -> {step.weight.coeffs}")
    if chain.singular:
        print("    hits a wall: every cohomology group vanishes")
    else:
        dim = weyl_dim(chain.final)
        print(f"    strictly dominant after {chain.length} steps:"
              f" H^{chain.length} has dimension {dim}")
    print()


def main():
    U = catalog("U")
    Qstar = catalog("Qstar")

    print("== Reflection chains ==\n")
    # one reflection and the chain dies on a wall
    show_chain(twist(U, -1))
    # six reflections to the dominant chamber: one group in degree 6
    show_chain(twist(U, -5))
    # no reflections needed at all
    show_chain(twist(U, 1))

    print("== Full twist sweeps ==\n")
    for name, bundle in (("U", U), ("Q*", Qstar)):
        for j in range(1, -6, -1):
            table = cohomology(twist(bundle, j))
            if table.is_zero():
                desc = "0"
            else:
                desc = ", ".join(
                    f"H^{i} = C^{e.dim} (highest weight {e.highest_weight.describe()})"
                    for i, e in table.entries
                )
            print(f"  H*(Gr(2,5), {name}({j:+d})) = {desc}")
        print()

    print("The symmetric square of U* has no cohomology in twists -1..-6:")
    S2 = catalog("Sym2Ustar")
    for j in range(1, 7):
        assert cohomology(twist(S2, -j)).is_zero()
    print("  all six twists are singular;"
          f" h^0 of the untwisted bundle is {cohomology(S2).dim(0)}")


if __name__ == "__main__":
    main()
