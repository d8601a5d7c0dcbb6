# The s-form Gram matrix and its Smith normal form.
from shapovalov.forms import gram_s_form, gram_power
from shapovalov.snf import smith_normal_form, invariant_factors_from_minors, snf_pointwise_product

X2 = gram_s_form(2, 3)
print(X2)

res = smith_normal_form(X2, want_transforms=True)
print("invariant factors:", res.invariant_factors)
print("from minors      :", invariant_factors_from_minors(X2))
print("U X V =", (res.U @ X2 @ res.V).entries)

# the form is multiplicative in s
d = 4
print(gram_s_form(6, d) == gram_s_form(2, d) @ gram_s_form(3, d))
print(gram_power(2, 3, d) == gram_s_form(8, d))

# and so are the invariant factors, once the two sides have coprime determinants
two = smith_normal_form(gram_s_form(2, d))
three = smith_normal_form(gram_s_form(3, d))
print(snf_pointwise_product(two, three).invariant_factors)
print(smith_normal_form(gram_s_form(6, d)).invariant_factors)
