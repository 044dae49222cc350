"""Single audit point for every published constant the test suite and the
verification commands compare against.

Each entry is the decimal string of the expected value (truncated display
precision of the source) plus the tolerance the reproduction is held to.
"""

EXPECTED = {
    # decay rate of x^6 (1-x)^8 / (1+x)^7 on (0,1), log scale
    "rukhadze_integral_decay": ("-11.84497806", 1e-8),
    # growth rate of the binomial-product coefficients of the same family
    "rukhadze_coefficient_growth": ("12.68147230", 1e-8),
    # digamma-weighted integral of the (7,6,8) carry profile
    "rukhadze_profile_saving": ("2.45775406", 1e-8),
    # assembled constants and exponent bound for log 2, (7n,6n,8n) family
    "rukhadze_c0": ("6.30273213", 1e-6),
    "rukhadze_c1": ("18.22371823", 1e-6),
    "rukhadze_mu": ("3.89139977", 1e-6),
    # plain (n,n,n) family bound for log 2
    "simple_log2_mu": ("4.62210083", 1e-8),
    # exponent bound for Q log2 + Q pi from the (2n,2n,2n;3n) family at (2, 1+i)
    "hata_pi_mu": ("8.01604539", 1e-4),
    # quoted exponent bound for Q log2 + Q log3 at (4/3, 3/2); see ledger notes
    "hu_log2log3_mu": ("11.1017577", 1e-3),
    # quoted exponent bound for the six-factor log 3 family
    "rhin_log3_mu": ("8.616", 0.05),
}


def expected_value(key):
    """(float value, tolerance) for a named expectation."""
    text, tol = EXPECTED[key]
    return float(text), tol
