# %% [markdown]
# # Slope inequalities with explicit hypothesis gates
#
# Each verdict says whether its hypotheses are met (or only conditional on an
# asserted gonality) and evaluates the inequality exactly.

# %%
from fibslope import presets
from fibslope.analysis import analyze
from fibslope.inequalities import SlopePolynomial
from fibslope.report import verdicts_markdown

for name, factory in presets.GOLDEN.items():
    report = analyze(factory())
    print(f"## {name}: g = {report.invariants.g}, a = {report.invariants.a}")
    print(verdicts_markdown(report.verdicts))

# %% The slope polynomial q(x) = (a-4b)x^2 - (a-2b)x + 2b + 2
q = SlopePolynomial.from_numbers(134, 22)
print("q(0), q(1) =", q(0), q(1), " vertex =", q.vertex, " discriminant =", q.discriminant)
print("min over -10..10:", min(q(n) for n in range(-10, 11)))
