# The auxiliary bases that triangularize the p-form.
from shapovalov.bases import (
    g_generator, G_element, M_basis, gm_coefficient_matrix,
    check_g_basis_properties, check_G_properties,
)
from shapovalov.divisors import D_r

p = 2
for l in range(1, 7):
    print("g_%d =" % l, g_generator(p, 1, 0, l))

print("G_(2)   =", G_element(p, (2,)))
print("G_(1^3) =", G_element(p, (1, 1, 1)))
print("M_(2,1) =", M_basis(p, 1, 3).expansions[(2, 1)])

# coefficient matrix of G(x) M(y) in the Cauchy kernel to the p-th power
W = gm_coefficient_matrix(p, 4)
for label, row in zip(W.rows, W.entries):
    print(label, row, "D_1 =", D_r(label, p, 1))

print(check_g_basis_properties(3, 2, 6))
print(check_G_properties(3, 4))
