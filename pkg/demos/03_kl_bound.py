"""Check the conditioning bound exactly on small discrete worlds.

The bound compares KL(p_client || p_cond), where p_cond is the prior
reweighted by the client likelihood, with lambda + ln Z - E_client ln lik.
Which divergence between prior and client plays the role of lambda matters.
"""
import math

from flmg import theory
from flmg.theory import DiscreteWorld

# an uninformative likelihood leaves the prior unchanged
w = DiscreteWorld([0.9, 0.1], [0.5, 0.5], [1.0, 1.0])
r = theory.theorem1_check(w)
print("two-point world, lik = 1:")
print(f"  lhs                         {r['lhs']:.4f}")
print(f"  rhs, KL(p_model || p_client) {r['rhs']:.4f}   holds: {r['holds']}")
print(f"  rhs, KL(p_client || p_model) {r['rhs_reverse']:.4f}   holds: {r['holds_reverse']}")
assert math.isclose(r["lhs"], r["rhs_reverse"])

rep = theory.verify_worlds(1000, seed=0, max_size=64)
print("\n1000 random worlds with up to 64 points:")
print(f"  violations with KL(p_model || p_client): {rep['counterexamples']}")
print(f"  violations with KL(p_client || p_model): {rep['counterexamples_reverse']}")
