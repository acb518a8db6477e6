"""Verbatim classification data for the 31 low-dimensional algebras.

Encoding: products map a 1-based basis pair (i, j) to the tuple of
1-based indices of the basis vectors appearing (with coefficient 1) in
e_i * e_j; twist maps send a 1-based source index to the index tuple of
its image.  Everything unlisted is zero (the zero-completion
convention).  Two entries transcribe contradictory duplicate lines; they
are stored as candidate readings and flagged, never silently repaired.

Alongside each entry sit the published derivation/centroid table rows
(dimension plus the free-entry positions of the displayed matrix), kept
verbatim so recomputation can audit them; ``None`` marks table-silent
entries.
"""

# -- two-dimensional entries ----------------------------------------------

_TWO_DIM = {
    "BTas_2^1": dict(
        dim=2,
        left={(1, 2): (1,), (2, 1): (1,), (2, 2): (1,)},
        right={(1, 2): (1,), (2, 1): (1,)},
        middle={(2, 2): (1,)},
        alpha={2: (1,)},
        beta={2: (1,)},
    ),
    "BTas_2^2": dict(
        dim=2,
        left={(1, 2): (1,), (2, 1): (1,), (2, 2): (1,)},
        right={(1, 2): (1,), (2, 1): (1,), (2, 2): (1,)},
        middle={(2, 2): (1,)},
        alpha={2: (1,)},
        beta={2: (1,)},
    ),
    "BTas_2^3": dict(
        dim=2,
        left={(2, 2): (1,)},
        right={(2, 2): (1,)},
        middle={(2, 1): (1,), (2, 2): (1,)},
        alpha={1: (1,), 2: (1, 2)},
        beta={1: (1,), 2: (1, 2)},
    ),
    "BTas_2^4": dict(
        dim=2,
        left={(2, 1): (1,), (2, 2): (1, 2)},
        right={(2, 1): (1,), (2, 2): (1, 2)},
        middle={(2, 1): (1,), (2, 2): (1, 2)},
        alpha={1: (1,), 2: (1, 2)},
        beta={1: (1,), 2: (1, 2)},
    ),
    "BTas_2^5": dict(
        dim=2,
        left={(1, 2): (1,), (2, 2): (2,)},
        right={(1, 2): (1,), (2, 2): (2,)},
        middle={(1, 2): (1,), (2, 2): (2,)},
        alpha={1: (1,), 2: (2,)},
        beta={1: (1,), 2: (1, 2)},
    ),
    "BTas_2^6": dict(
        dim=2,
        left={(2, 2): (1,)},
        right={(2, 2): (1,)},
        middle={(2, 2): (1,)},
        alpha={1: (1,), 2: (2,)},
        beta={1: (1,), 2: (1, 2)},
    ),
    # The published list for this entry carries two contradictory lines
    # for the same left product; stored as candidate readings below.
    "BTas_2^7": dict(
        dim=2,
        left=None,
        right={(1, 2): (1,), (2, 2): (1, 2)},
        middle={(1, 2): (1,), (2, 2): (1, 2)},
        alpha={1: (1,), 2: (1, 2)},
        beta={1: (1,), 2: (1, 2)},
    ),
}

AMBIGUOUS = {
    "BTas_2^7": dict(
        verbatim=("e1 -| e2 = e1", "e1 -| e2 = e1 + e2"),
        slot="left",
        candidates=(
            ("second-line-as-e2e2", {(1, 2): (1,), (2, 2): (1, 2)}),
            ("first-line-kept", {(1, 2): (1,)}),
            ("second-line-kept", {(1, 2): (1, 2)}),
        ),
        note=(
            "two contradictory lines for e1 -| e2; the e2 -| e2 reading of the "
            "second line matches the shape of the other product blocks"
        ),
    ),
    "BTas_3^24": dict(
        verbatim=("e2 |- e3 = e3", "e2 |- e3 = e1"),
        slot="right",
        candidates=(
            ("first-line-kept", {(2, 2): (1, 3), (2, 3): (3,)}),
            ("second-line-kept", {(2, 2): (1, 3), (2, 3): (1,)}),
        ),
        note="two contradictory lines for e2 |- e3; first line kept as primary",
    ),
}

# -- three-dimensional entries ----------------------------------------------

_THREE_DIM = {
    "BTas_3^1": dict(
        dim=3,
        left={(1, 2): (1,), (2, 2): (1,), (2, 3): (1,)},
        right={(2, 1): (1,), (2, 2): (1,), (3, 2): (1,)},
        middle={(2, 2): (1,), (2, 3): (1,), (3, 2): (1,)},
        alpha={3: (3,)},
        beta={2: (1,)},
    ),
    "BTas_3^2": dict(
        dim=3,
        left={(1, 2): (1,), (2, 1): (1,), (3, 2): (1,)},
        right={(2, 2): (1,), (2, 3): (1,), (3, 3): (1,)},
        middle={(2, 1): (1,), (2, 3): (1,), (3, 2): (1,)},
        alpha={3: (3,)},
        beta={2: (1,), 3: (3,)},
    ),
    "BTas_3^3": dict(
        dim=3,
        left={(2, 3): (1,), (3, 1): (1,), (3, 2): (1,)},
        right={(1, 2): (1,), (2, 3): (1,), (3, 2): (1,)},
        middle={(1, 1): (1,), (1, 2): (1,), (2, 3): (1,), (3, 1): (1,)},
        alpha={2: (2,)},
        beta={3: (3,)},
    ),
    "BTas_3^4": dict(
        dim=3,
        left={(1, 2): (1,), (2, 1): (3,), (2, 2): (1, 3)},
        right={(1, 2): (1,), (2, 1): (1,), (2, 2): (1, 3), (2, 3): (3,)},
        middle={(2, 2): (1,), (2, 3): (1,), (3, 3): (3,)},
        alpha={2: (1,)},
        beta={2: (1,)},
    ),
    "BTas_3^5": dict(
        dim=3,
        left={(1, 2): (1,), (2, 1): (3,), (2, 2): (1,), (2, 3): (1,)},
        right={(2, 1): (1,), (2, 3): (1,), (3, 2): (1,)},
        middle={(1, 2): (1,), (2, 2): (1,), (3, 2): (1,)},
        alpha={3: (3,)},
        beta={2: (1,), 3: (3,)},
    ),
    "BTas_3^6": dict(
        dim=3,
        left={(1, 2): (1,), (2, 1): (1,), (2, 2): (1,)},
        right={(2, 2): (1,), (2, 3): (1,), (3, 3): (1,)},
        middle={(2, 1): (1,), (2, 2): (1,), (2, 3): (1,), (3, 3): (1,)},
        alpha={3: (3,)},
        beta={2: (1,)},
    ),
    "BTas_3^7": dict(
        dim=3,
        left={(1, 1): (1,), (1, 2): (1,), (2, 3): (1,), (3, 1): (1,)},
        right={(1, 1): (1,), (2, 3): (1,), (3, 1): (1,)},
        middle={(1, 2): (1,), (2, 3): (1,), (3, 2): (1,)},
        alpha={2: (2,)},
        beta={3: (3,)},
    ),
    "BTas_3^8": dict(
        dim=3,
        left={(1, 1): (1,), (2, 3): (1,), (3, 1): (1,), (3, 2): (1,)},
        right={(1, 2): (1,), (2, 3): (1,), (3, 1): (1,)},
        middle={(2, 3): (1,), (3, 1): (1,), (3, 2): (1,)},
        alpha={2: (2,)},
        beta={3: (3,)},
    ),
    "BTas_3^9": dict(
        dim=3,
        left={(1, 1): (1,), (1, 2): (1,), (3, 1): (1,)},
        right={(2, 1): (1,), (3, 1): (1,), (3, 2): (1,)},
        middle={(1, 1): (1,), (3, 1): (1,), (3, 2): (1,)},
        alpha={2: (2,)},
        beta={3: (3,)},
    ),
    "BTas_3^10": dict(
        dim=3,
        left={(2, 1): (2,), (2, 2): (2,), (3, 1): (2,), (3, 2): (2,)},
        right={(2, 1): (2,), (3, 1): (2,), (3, 2): (2,)},
        middle={(2, 2): (2,), (3, 1): (2,), (3, 2): (2,)},
        alpha={1: (1,)},
        beta={3: (3,)},
    ),
    "BTas_3^11": dict(
        dim=3,
        left={(2, 1): (3,), (2, 3): (3,), (3, 1): (3,)},
        right={(2, 1): (3,), (3, 1): (3,), (3, 3): (3,)},
        middle={(2, 1): (3,), (2, 3): (3,), (3, 1): (3,), (3, 3): (3,)},
        alpha={1: (1,)},
        beta={3: (3,)},
    ),
    "BTas_3^12": dict(
        dim=3,
        left={(2, 1): (3,), (3, 1): (3,), (3, 3): (3,)},
        right={(1, 2): (3,), (2, 1): (3,), (3, 1): (3,)},
        middle={(2, 1): (3,), (2, 3): (3,), (3, 3): (3,)},
        alpha={1: (1,)},
        beta={3: (3,)},
    ),
    "BTas_3^13": dict(
        dim=3,
        left={(1, 2): (3,), (2, 1): (3,), (3, 1): (3,), (3, 3): (3,)},
        right={(2, 1): (3,), (2, 3): (3,), (3, 1): (3,)},
        middle={(1, 2): (3,), (2, 3): (3,), (3, 3): (3,)},
        alpha={1: (1,)},
        beta={3: (3,)},
    ),
    "BTas_3^14": dict(
        dim=3,
        left={(1, 2): (3,), (2, 2): (3,), (2, 3): (3,)},
        right={(2, 1): (3,), (2, 2): (3,), (3, 2): (3,), (3, 3): (3,)},
        middle={(1, 2): (3,), (2, 2): (3,), (3, 2): (3,)},
        alpha={1: (1,)},
        beta={1: (1,)},
    ),
    "BTas_3^15": dict(
        dim=3,
        left={(2, 1): (3,), (2, 2): (3,), (2, 3): (3,)},
        right={(2, 2): (3,), (2, 3): (3,), (3, 3): (3,)},
        middle={(2, 1): (3,), (3, 2): (3,), (3, 3): (3,)},
        alpha={1: (1,)},
        beta={1: (1,)},
    ),
    "BTas_3^16": dict(
        dim=3,
        left={(2, 1): (1, 3), (2, 2): (1, 3), (2, 3): (1, 3), (3, 2): (3,)},
        right={(1, 2): (1, 3), (2, 1): (1, 3)},
        middle={(2, 2): (1, 3), (2, 3): (3,), (3, 2): (1,)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    "BTas_3^17": dict(
        dim=3,
        left={(1, 1): (1, 3), (2, 1): (1, 3), (2, 2): (1, 3), (2, 3): (1, 3)},
        right={(2, 1): (1, 3), (2, 2): (1, 3), (3, 2): (1, 3)},
        middle={(2, 2): (1, 3), (3, 2): (1, 3)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    "BTas_3^18": dict(
        dim=3,
        left={(2, 1): (1, 3), (2, 2): (1, 3), (2, 3): (1, 3), (3, 2): (1, 3)},
        right={(1, 2): (1, 3), (2, 1): (1, 3), (3, 2): (1, 3)},
        middle={(2, 2): (1, 3), (2, 3): (1, 3)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    "BTas_3^19": dict(
        dim=3,
        left={(2, 2): (1,), (2, 3): (1, 3), (3, 3): (3,)},
        right={(1, 2): (1,), (2, 1): (1,), (3, 3): (1, 3)},
        middle={(2, 1): (1, 3), (2, 3): (1, 3), (3, 3): (1, 3)},
        alpha={2: (1,)},
        beta={2: (1,)},
    ),
    "BTas_3^20": dict(
        dim=3,
        left={(1, 2): (1, 3), (2, 2): (1, 3), (2, 3): (1, 3)},
        right={(2, 2): (1, 3), (2, 3): (1, 3), (3, 2): (1, 3)},
        middle={(2, 1): (1,), (2, 2): (1, 3), (3, 2): (1, 3)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    "BTas_3^21": dict(
        dim=3,
        left={(1, 2): (1,), (2, 1): (1, 3), (2, 2): (1, 3)},
        right={(1, 2): (1, 3), (2, 1): (1, 3), (2, 2): (1, 3)},
        middle={(2, 1): (1,), (2, 3): (1, 3), (3, 3): (1, 3)},
        alpha={2: (1,)},
        beta={2: (1,)},
    ),
    "BTas_3^22": dict(
        dim=3,
        left={(1, 2): (3,), (2, 2): (1, 3), (3, 3): (1, 3)},
        right={(2, 1): (1,), (2, 2): (1, 3), (3, 2): (1, 3)},
        middle={(2, 2): (1, 3), (2, 3): (1, 3), (3, 2): (1,)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    "BTas_3^23": dict(
        dim=3,
        left={(2, 1): (3,), (2, 2): (1, 3), (2, 3): (1, 3), (3, 2): (1, 3)},
        right={(2, 1): (3,), (2, 2): (1,)},
        middle={(2, 1): (1, 3), (2, 2): (3,), (2, 3): (3,)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
    # Duplicate contradictory |- line; candidate readings in AMBIGUOUS.
    "BTas_3^24": dict(
        dim=3,
        left={(2, 1): (3,), (2, 2): (3,), (2, 3): (1, 3)},
        right=None,
        middle={(1, 2): (1, 3), (2, 3): (1, 3), (3, 2): (3,)},
        alpha={2: (1,), 3: (2,)},
        beta={2: (1,)},
    ),
}

RAW_ENTRIES = {**_TWO_DIM, **_THREE_DIM}

# -- published derivation tables (dim, free-entry positions as displayed) ----

DER_TABLE = {
    "BTas_2^1": (1, ((2, 1),)),
    "BTas_2^2": (1, ((2, 1),)),
    "BTas_2^6": (1, ((2, 1),)),
    "BTas_3^1": (2, ((2, 1), (3, 3))),
    "BTas_3^2": (1, ((2, 1),)),
    "BTas_3^3": (2, ((2, 2), (3, 3))),
    "BTas_3^4": (2, ((2, 1), (2, 3))),
    "BTas_3^5": (1, ((2, 1),)),
    "BTas_3^6": (2, ((2, 1), (3, 3))),
    "BTas_3^7": (2, ((2, 2), (3, 3))),
    "BTas_3^8": (2, ((2, 2), (3, 3))),
    "BTas_3^9": (2, ((2, 2), (3, 3))),
    "BTas_3^10": (2, ((1, 1), (3, 3))),
    "BTas_3^11": (2, ((1, 1), (2, 2))),
    "BTas_3^12": (2, ((1, 1), (2, 2))),
    "BTas_3^13": (2, ((1, 1), (2, 2))),
    "BTas_3^14": (3, ((1, 1), (2, 2), (2, 3))),
    "BTas_3^15": (2, ((1, 1), (2, 3))),
    "BTas_3^19": (2, ((2, 1), (2, 3))),
}

# -- published centroid table (all listed rows have dim 1) -------------------

CENT_TABLE = {
    "BTas_3^1": (1, ((2, 1),)),
    "BTas_3^2": (1, ((2, 1),)),
    "BTas_3^3": (1, ((3, 3),)),
    "BTas_3^4": (1, ((3, 1),)),
    "BTas_3^5": (1, ((2, 1),)),
    "BTas_3^6": (1, ((2, 1),)),
    "BTas_3^7": (1, ((3, 3),)),
    "BTas_3^8": (1, ((3, 3),)),
    "BTas_3^9": (1, ((3, 3),)),
    "BTas_3^10": (1, ((3, 3),)),
    "BTas_3^11": (1, ((2, 2),)),
    "BTas_3^12": (1, ((2, 2),)),
    "BTas_3^13": (1, ((2, 2),)),
    "BTas_3^15": (1, ((1, 1),)),
    "BTas_3^16": (1, ((3, 1),)),
    "BTas_3^18": (1, ((3, 1),)),
    # Displayed at matrix position (3, 1) but labeled c_13 in the source;
    # the position is what the recomputation audits.
    "BTas_3^19": (1, ((3, 1),)),
    "BTas_3^20": (1, ((3, 1),)),
    "BTas_3^21": (1, ((3, 1),)),
    "BTas_3^22": (1, ((3, 1),)),
    "BTas_3^23": (1, ((3, 1),)),
    "BTas_3^24": (1, ((3, 1),)),
}

# The closing corollary asserts every two-dimensional centroid is zero.
CENT_TWO_DIM_COROLLARY = 0

# -- the weighted-operator example algebra ------------------------------------

ROTA_BAXTER_EXAMPLE = dict(
    dim=2,
    left={(1, 2): (1,), (2, 1): (1,)},
    right={(1, 2): (1,)},
    middle={(1, 2): (1,), (2, 2): (1,)},
    alpha={2: (1,)},
    beta={2: (1,)},
)
