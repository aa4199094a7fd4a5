"""Exact LP decisions with their certificates, and LP maxima for small n."""

from qgf4.bounds import lp_feasible, lp_max_distance

for n, k, d in [(10, 1, 5), (11, 1, 5), (24, 0, 10)]:
    res = lp_feasible(n, k, d)
    state = f"feasible (branch {res.branch})" if res.feasible else "infeasible"
    print(f"[[{n},{k},{d}]]: {state}, certificate checks: {res.verify()}")
    if not res.feasible:
        y = res.certificates[1].y
        used = [row.label for v, row in zip(y, res.problems[1].rows) if v]
        print("   rows combined in branch 1:", ", ".join(used))

print()
print("largest d the LP allows")
print("n\\k " + "".join(f"{k:>3}" for k in range(9)))
for n in range(3, 11):
    print(f"{n:<4}" + "".join(f"{lp_max_distance(n, k):>3}" for k in range(min(n, 8) + 1)))
