"""Build a finite Coxeter group and poke at its elements.

Every element is a permutation of the root system, so lengths, orders and
inverses are exact array computations.
"""

from dworkbench import build_group, coxeter_element, element_order, p_regular_part

group = build_group("F4")
print(group)
print("positive roots:", group.n_positive)
print("generator orders:", [element_order(s) for s in group.generators])

c = coxeter_element(group, 0b1111)
print("Coxeter element length:", c.length, "order:", element_order(c))

w0 = max(group.elements(), key=lambda w: w.length)
print("longest element has length", w0.length, "and order", element_order(w0))

for p in (2, 3):
    part = p_regular_part(c, p)
    print("p = %d: regular part of the Coxeter element has order %d" % (p, element_order(part)))

h3 = build_group("H3")
print(h3, "built over Q(sqrt 5); first simple root:", h3.positive_roots[0])
