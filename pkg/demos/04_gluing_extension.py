"""
Gluing one extra generator onto the progression
===============================================

Adjoining a vector b whose multiple mu*b falls back into the semigroup is a
gluing: the defining ideal grows by the single binomial y^mu - x^lambda, the
Apery set gets mu layers, and the Cohen-Macaulay type survives unchanged,
while normality can be lost. The showcase here loses it.
"""

from apsemigroups import (
    Vec2,
    apery_bruteforce,
    apery_extended,
    build_family,
    cm_type,
    extended_betti,
    extended_generating_set,
    gluing_data,
    hilbert_numerator,
    hilbert_truncation_check,
    default_box,
    is_cohen_macaulay,
    is_normal,
    qf_extended,
    quasi_frobenius,
)

# b = (9,11) is not in the base semigroup, but 2b is.
f = build_family(Vec2(2, 3), Vec2(2, 2), 3, Vec2(9, 11))
print("glued family:", f)

data = gluing_data(f)
print("mu:", data.mu)
print("chosen representation of mu*b:", data.lam)
print("extra ideal generator:", data.extra_generator)
print("generators of the extended ideal:", [str(g) for g in extended_generating_set(f)])

# The Apery set now has k*mu elements: closed form and definition agree.
closed = apery_extended(f)
brute = apery_bruteforce(f)
print("apery (closed form):", closed.sorted_elements())
print("apery (brute force):", brute.sorted_elements())
assert closed.elements == brute.elements

# Quasi-Frobenius elements shift by (mu-1)b; the type is still k - 1.
print("quasi-Frobenius:", sorted(qf_extended(f)))
assert qf_extended(f) == quasi_frobenius(f)
print("Cohen-Macaulay:", is_cohen_macaulay(f).holds, " type:", cm_type(f))

# -QF no longer lies inside the cone, so the extended ring is not normal.
verdict = is_normal(f)
print("normal:", verdict.holds, " witness:", verdict.witness)

# The one-step mapping cone doubles the resolution: Betti numbers and the
# Hilbert numerator (base numerator times 1 - t^(mu*b)) follow.
print("extended Betti numbers:", extended_betti(f.k))
form = hilbert_numerator(f)
print("extended numerator terms:", len(form.numerator))
print("series matches enumeration:", hilbert_truncation_check(f, form, default_box(f)).passed)
