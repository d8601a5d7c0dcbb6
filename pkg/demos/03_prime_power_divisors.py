# Closed-form elementary divisors of the p^r-form, checked against direct SNF.
from shapovalov.divisors import D_r, predicted_prime_power, computed_invariants, check_conjecture
from shapovalov.partitions import enumerate_partitions

p, r = 3, 2
for lam in enumerate_partitions(5):
    print(lam, D_r(lam, p, r))

for d in range(7):
    predicted = predicted_prime_power(p, r, d).as_chain()
    computed = computed_invariants(p ** r, d)
    print(d, computed == predicted, computed[-3:])

# beyond r <= p nothing is proven; the sweep just reports what it sees
report = check_conjecture(2, 3, 5)
for entry in report.degrees:
    print(entry["d"], entry["match"])
