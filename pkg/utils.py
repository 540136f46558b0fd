from math import gcd


def square_is(n, k, residue):
    """ k^2 == residue (mod n) """
    return (k * k - residue) % n == 0


def square_is_pm_one(n, k):
    return square_is(n, k, 1) or square_is(n, k, -1)


def square_is_pm_k(n, k):
    return square_is(n, k, k) or square_is(n, k, -k)


def mod_inverse(x, m):
    """
    inverse of x modulo m, for gcd(x, m) == 1.
    :raises ValueError: if x is not invertible mod m
    """
    if m == 1:
        return 0
    return pow(x, -1, m)


def valid_pairs(n_max, n_min=3):
    """ every (n, k) with n_min <= n <= n_max and 0 < k < n/2, in (n, k) order """
    for n in range(n_min, n_max + 1):
        for k in range(1, (n + 1) // 2):
            yield n, k


def coprime(n, k):
    return gcd(n, k) == 1
