"""Two 1-accessible steps that cannot be merged into one.

In sp_8, [6,1,1] reaches [4,2,2] by move 2 and [4,2,2] reaches [4,2,1,1]
by a generalised move 1, but no single cocharacter takes [6,1,1] to
[4,2,1,1]. Any element whose limit is the standard [4,2,1,1] form lies in
an explicit 7-parameter family; for b != 0 every member has x^5 = b^2 E_18
and rank 6, hence two Jordan blocks, never the three of [6,1,1].
"""

import random
from fractions import Fraction

from nilaccess import SP, AlgebraKind, Partition, find_chain, jordan_type, mat_power, one_accessible_status, rank, sp_move_witness
from nilaccess.witnesses import nontransitivity_family

sp8 = AlgebraKind(SP, 8)
src, tgt = Partition([6, 1, 1]), Partition([4, 2, 1, 1])

chain = find_chain(sp8, src, tgt)
print("chain:", " -> ".join([str(src)] + [f"{p} ({mv})" for p, mv in chain]))
status, why = one_accessible_status(sp8, src, tgt)
print(f"single step: {status.value} ({why})")

w = sp_move_witness(2, n=3, m=1)
print(f"\nfirst step witness, weights {w.lam}:")
print(w.x_prime.pretty())

rng = random.Random(1)
params = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(7)]
params[1] = params[1] or Fraction(1)
x = nontransitivity_family(*params)
print("\na random member of the family:")
print(x.pretty())
print(f"rank {rank(x)}, type {jordan_type(x)}, x^5 (1,8) entry {mat_power(x, 5).entry(1, 8)} = b^2 = {params[1] ** 2}")
