"""Building and checking explicit witnesses in gl_n.

Every dominance cover in gl_n is realised by a single cocharacter. The
worked gl_4 example moves [3,1] to [2,2]; the three-part constructor
routes [r+k, s+l-k, t-l] -> [r, s, t] through move I or move II depending
on which transfer is larger.
"""

from nilaccess import gl_example_31, gl_rst_witness, normalize_to_sl, verify_witness

w = gl_example_31()
print(w.name, "|", w.provenance)
print(w.x_prime.pretty())
print("weights", w.lam, " sl weights", normalize_to_sl(w.lam))
print("limit:")
print(w.limit().pretty())
print(verify_witness(w).summary())

for args in ((3, 3, 2, 1, 1), (4, 4, 3, 1, 2), (4, 3, 2, 2, 1)):
    w = gl_rst_witness(*args)
    print(f"\n(r,s,t,k,l)={args}: {w.source} -> {w.target} via {w.provenance}")
    print(verify_witness(w).summary())
