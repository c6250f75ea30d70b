"""Independent oracles shared by the test modules."""
from fractions import Fraction
from itertools import permutations


def leibniz_det(rows):
    """Permutation-sum determinant; independent of every elimination routine."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(1)
        for i, p in enumerate(perm):
            term *= rows[i][p]
            if term == 0:
                break
        total += -term if inversions % 2 else term
    return total


def direct_ones(rows):
    return sum(sum(row) for row in rows)
