"""
Demo script for the filiform cohomology toolkit
Walks through the algebra, its cohomology and the central extension catalog for one prime
"""
import sys
from pathlib import Path

import numpy as np

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from algebra import make_m2, verify_restricted, zero_lambda
from cochain import phi_k, xi
from cohomology import expected_grade_table, grade_kernel_table, h1, h1_star, h2, h2_star
from extensions import catalog_frame, extension_catalog, pfold_bracket_witness
from field import make_field
from restricted import eval_omega, tilde


def demo_filiform_cohomology(p: int = 5):
    """Demonstrate the computations for m_2^0(p)"""
    print("🚀 Restricted Filiform Cohomology Demo")
    print("=" * 60)
    print(f"This demo builds m_2^lambda({p}) with lambda = 0 over GF({p}),")
    print("computes its ordinary and restricted cohomology, and lists")
    print("the one-dimensional restricted central extensions.")
    print()

    # Build the algebra
    print("📋 Building the algebra...")
    field = make_field(p)
    A = make_m2(field, zero_lambda(field))
    print(f"✓ {A.name}, dimension {A.dim}")

    report = verify_restricted(A)
    for check in report.checks:
        print(f"   {'✓' if check.passed else '✗'} {check.name} {check.detail}")

    # Cohomology
    print("\n🔍 Cohomology:")
    print("-" * 50)
    for compute in (h1, h1_star, h2, h2_star):
        result = compute(A)
        print(f"   {result.name}: dimension {result.dimension}")
        for rep in result.describe_representatives(field, A.dim):
            print(f"      {rep}")

    print("\n📊 dim ker d2 by grade (computed / expected):")
    expected = expected_grade_table(p)
    for k, dim in grade_kernel_table(A).items():
        print(f"   grade {k:2d}: {dim} / {expected[k]}")

    # A map with the *-property
    print("\n🧮 Maps with the *-property:")
    print("-" * 50)
    rng = np.random.default_rng(0)
    g = A.random_element(rng)
    print(f"   g = {[int(x) for x in g]}")
    omega = tilde(A, phi_k(field, p, p + 1))
    print(f"   phi_{p + 1}~(g) = {int(eval_omega(A, omega, g))}, a1^{p - 1}*a2 = {int(g[0] ** (p - 1) * g[1])}")
    if p == 5:
        print(f"   xi~(g) = {int(eval_omega(A, tilde(A, xi(field, p)), g))}")

    # Extensions
    print("\n📚 Central extension catalog:")
    print("-" * 50)
    frame = catalog_frame(A, verify=True)
    print(frame[["extension", "bracket_correction", "base_p_power", "p_correction", "verified"]].to_string(index=False))

    for E in extension_catalog(A):
        found = pfold_bracket_witness(E)
        if found is not None:
            sequence, value = found
            print(f"\n   nonzero {p}-fold bracket in {E.name}: e_{sequence} -> {int(value[-1])}c")
            break

    print("\n🎉 Demo completed successfully!")
    print("\n💡 Next steps:")
    print("   1. Run: python src/cli.py cohomology --prime 7 --lambda random:1")
    print("   2. Run: python src/cli.py extensions --prime 5 --format latex")
    print("   3. Run the test suites with pytest")


if __name__ == "__main__":
    demo_filiform_cohomology()
