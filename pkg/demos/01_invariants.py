"""
Semigroup invariants from an arithmetic progression of lattice vectors
======================================================================

A tour of the basic invariants of S = <a, a+d, ..., a+kd> in N^2: the
Apery set, the quasi-Frobenius elements, the Cohen-Macaulay type, and
normality. Everything is exact; there is no floating point anywhere.
"""

from apsemigroups import (
    Vec2,
    apery_bruteforce,
    apery_closed_form,
    build_family,
    cm_type,
    degree_in_rays,
    extremal_rays,
    is_cohen_macaulay,
    is_member,
    is_normal,
    quasi_frobenius,
)

# Start from a = (5,4) and d = (4,9) with k = 3 steps. Validation checks
# that a and d are independent and that no generator is redundant.
f = build_family(Vec2(5, 4), Vec2(4, 9), 3)
print("family:", f)

# The cone of the semigroup is spanned by the first and last generator.
r1, r2 = extremal_rays(f)
print("extremal rays:", r1, r2)

# Membership comes with a certificate: the coefficients of a representation.
v = 2 * Vec2(9, 13) + Vec2(17, 31)
print(f"certificate for {v}:", is_member(f, v))
print("is (1,1) a member?", is_member(f, Vec2(1, 1)))

# The Apery set with respect to the rays has a closed form: the origin and
# the k-1 middle generators. The brute-force enumeration recomputes it from
# the definition, so the two can be compared.
closed = apery_closed_form(f)
brute = apery_bruteforce(f)
print("apery (closed form):", closed.sorted_elements())
print("apery (brute force):", brute.sorted_elements())
assert closed.elements == brute.elements

# Every nonzero Apery element has degree exactly 1 in the ray coordinates.
for e in sorted(closed.elements):
    if not e.is_zero():
        coords, deg = degree_in_rays(f, e)
        print(f"  {e} = {coords[0]}*{r1} + {coords[1]}*{r2}, degree {deg}")

# Quasi-Frobenius elements: maximal Apery elements shifted by the ray sum.
# Their count is the Cohen-Macaulay type, which is always k - 1 here.
print("quasi-Frobenius:", sorted(quasi_frobenius(f)))
print("Cohen-Macaulay type:", cm_type(f), "(Gorenstein only when k = 2)")

# The ring is Cohen-Macaulay (pairwise Apery differences avoid the ray
# lattice) and normal (-QF lies strictly inside the cone).
print("Cohen-Macaulay:", is_cohen_macaulay(f).holds)
print("normal:", is_normal(f).holds)
