"""Drive a small verification campaign through the library API."""

from gmpy2 import mpq

from hq3 import GridSpec, run_campaign
from hq3.campaign import summary_table

grid = GridSpec(
    name="demo",
    p=[mpq(-1), mpq(1), mpq(3)],
    q=[mpq(-2), mpq(-1), mpq(2)],
    w0=[mpq(0), mpq(2)],
    w1=[mpq(1)],
    s=[1, 2],
    lambdas=[
        (mpq(0), mpq(0), mpq(0)),
        (mpq(1), mpq(1), mpq(1)),
        (mpq(-1), mpq(2), mpq(1)),
    ],
    n_max=8,
)

print("Verifying the whole catalog on a small grid...\n")
result = run_campaign(grid, jobs=1)
print(summary_table(result.summary))
print("\nexit code:", result.exit_code, "(0 means no identity failed anywhere)")

print("\nDegenerate rows are hypothesis violations, not failures; e.g. at")
print("(p=3, q=2, s=1) the summation denominator q^s - V_s + 1 vanishes, and")
print("points with W_s = 0 cannot define W_n(s) at all.")

print("\nNegative control: perturbing one side of thm4.1 must break it...")
grid.identities = ["thm4.1"]
bad = run_campaign(grid, jobs=1, perturb="thm4.1", fail_fast=True)
witness = bad.fails[0]["witness"]
print(f"  perturbed run: {bad.summary['fails']} failure(s), exit {bad.exit_code},"
      f" first witness at n={witness['n']}")
