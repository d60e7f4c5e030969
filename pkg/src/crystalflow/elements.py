"""Built-in element tables: standard atomic masses and covalent radii.

The radii follow the widely used single-bond covalent values (Cordero et al.,
Dalton Trans. 2008) for the twelve elements the pipeline supports.  Two atoms
are considered bonded when their separation is at most the sum of their radii
times ``bond_scale`` (default 1.0); the table can be overridden per run.
"""

from .errors import UnknownElementError

# amu, IUPAC 2021 standard atomic weights (abridged)
ATOMIC_MASSES = {
    "H": 1.008,
    "B": 10.81,
    "C": 12.011,
    "N": 14.007,
    "O": 15.999,
    "F": 18.998,
    "Si": 28.085,
    "P": 30.974,
    "S": 32.06,
    "Cl": 35.45,
    "Br": 79.904,
    "I": 126.904,
}

# Angstrom
COVALENT_RADII = {
    "H": 0.31,
    "B": 0.84,
    "C": 0.76,
    "N": 0.71,
    "O": 0.66,
    "F": 0.57,
    "Si": 1.11,
    "P": 1.07,
    "S": 1.05,
    "Cl": 1.02,
    "Br": 1.20,
    "I": 1.39,
}

HEAVY = frozenset(e for e in ATOMIC_MASSES if e != "H")


def atomic_mass(symbol):
    try:
        return ATOMIC_MASSES[symbol]
    except KeyError:
        raise UnknownElementError(f"no atomic mass for element {symbol!r}") from None


def covalent_radius(symbol):
    try:
        return COVALENT_RADII[symbol]
    except KeyError:
        raise UnknownElementError(f"no covalent radius for element {symbol!r}") from None
