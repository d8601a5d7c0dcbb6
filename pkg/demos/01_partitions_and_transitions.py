# Partitions, the three classical bases, and the matrices between them.
from shapovalov.partitions import enumerate_partitions, partition_count, enumerate_multipartitions
from shapovalov.symfunc import transition_matrix, power_sum_in_m, homogeneous_in_m

# partitions come out in descending lexicographic order
print(enumerate_partitions(4))
print([partition_count(d) for d in range(12)])

# multipartitions index weight spaces of tensor powers
for mp in enumerate_multipartitions(2, 2):
    print(mp)

# power sums and complete homogeneous functions, written in monomials
print("p_(1,1) =", power_sum_in_m((1, 1)))
print("h_(2,1) =", homogeneous_in_m((2, 1)))

# L = M(p, m) is lower triangular; N = M(h, m) is unimodular
for d in range(1, 6):
    L = transition_matrix("p", "m", d).matrix
    N = transition_matrix("h", "m", d).matrix
    print(d, "det L =", L.determinant(), " det N =", N.determinant())

A = transition_matrix("h", "p", 3).matrix
print("M(h, p) at degree 3:")
for label, row in zip(A.rows, A.entries):
    print("  ", label, [str(x) for x in row])
