"""Canonically first faultfree tiling of each basis rectangle, as (row, col, missing).

Generated by polyfault.generative.regenerate_basis_catalog(); do not edit by hand.
"""

BASIS = {
    (4, 6): (
        (1, 1, 'BR'),
        (1, 3, 'BL'),
        (1, 5, 'BL'),
        (2, 2, 'BR'),
        (2, 4, 'TL'),
        (3, 1, 'TR'),
        (3, 3, 'TR'),
        (3, 5, 'TL'),
    ),
    (4, 9): (
        (1, 1, 'BR'),
        (1, 3, 'TR'),
        (1, 4, 'BL'),
        (1, 6, 'BR'),
        (1, 8, 'BL'),
        (2, 2, 'TR'),
        (2, 7, 'BL'),
        (3, 1, 'TR'),
        (3, 3, 'TL'),
        (3, 5, 'TR'),
        (3, 6, 'BL'),
        (3, 8, 'TL'),
    ),
    (5, 6): (
        (1, 1, 'BL'),
        (1, 3, 'BR'),
        (1, 5, 'BL'),
        (2, 1, 'TR'),
        (2, 4, 'BR'),
        (3, 2, 'TL'),
        (3, 5, 'BL'),
        (4, 1, 'TR'),
        (4, 3, 'TL'),
        (4, 5, 'TR'),
    ),
    (5, 9): (
        (1, 1, 'TR'),
        (1, 2, 'BL'),
        (1, 4, 'BL'),
        (1, 6, 'BL'),
        (1, 8, 'BL'),
        (2, 3, 'TL'),
        (2, 5, 'TL'),
        (2, 8, 'TR'),
        (3, 1, 'BL'),
        (3, 7, 'TR'),
        (4, 1, 'TR'),
        (4, 3, 'TR'),
        (4, 4, 'BL'),
        (4, 6, 'TR'),
        (4, 8, 'TL'),
    ),
    (6, 6): (
        (1, 1, 'BR'),
        (1, 3, 'BL'),
        (1, 5, 'BL'),
        (2, 2, 'BL'),
        (2, 4, 'TL'),
        (3, 1, 'BR'),
        (3, 5, 'TL'),
        (4, 2, 'BR'),
        (4, 4, 'TR'),
        (5, 1, 'TR'),
        (5, 3, 'TR'),
        (5, 5, 'TL'),
    ),
    (6, 9): (
        (1, 1, 'TR'),
        (1, 2, 'BL'),
        (1, 4, 'BL'),
        (1, 6, 'BL'),
        (1, 8, 'BL'),
        (2, 3, 'TL'),
        (2, 5, 'TL'),
        (2, 7, 'TL'),
        (3, 1, 'BR'),
        (3, 8, 'TL'),
        (4, 2, 'BR'),
        (4, 4, 'BR'),
        (4, 6, 'BR'),
        (5, 1, 'TR'),
        (5, 3, 'TR'),
        (5, 5, 'TR'),
        (5, 7, 'TR'),
        (5, 8, 'BL'),
    ),
    (7, 6): (
        (1, 1, 'BL'),
        (1, 3, 'BR'),
        (1, 5, 'BL'),
        (2, 1, 'TR'),
        (2, 4, 'BL'),
        (3, 3, 'BL'),
        (3, 5, 'TL'),
        (4, 1, 'BR'),
        (4, 3, 'TR'),
        (5, 2, 'TR'),
        (5, 5, 'BL'),
        (6, 1, 'TR'),
        (6, 3, 'TL'),
        (6, 5, 'TR'),
    ),
    (7, 9): (
        (1, 1, 'TR'),
        (1, 2, 'BL'),
        (1, 4, 'BL'),
        (1, 6, 'BL'),
        (1, 8, 'BL'),
        (2, 3, 'TL'),
        (2, 5, 'TL'),
        (2, 7, 'TL'),
        (3, 1, 'BL'),
        (3, 8, 'TL'),
        (4, 1, 'TR'),
        (4, 3, 'TR'),
        (4, 4, 'BL'),
        (4, 6, 'BL'),
        (5, 5, 'TL'),
        (5, 8, 'BL'),
        (6, 1, 'TR'),
        (6, 2, 'BL'),
        (6, 4, 'TR'),
        (6, 6, 'TL'),
        (6, 8, 'TR'),
    ),
    (8, 6): (
        (1, 1, 'BL'),
        (1, 3, 'BR'),
        (1, 5, 'BL'),
        (2, 1, 'TR'),
        (2, 4, 'BL'),
        (3, 3, 'BL'),
        (3, 5, 'TL'),
        (4, 1, 'TR'),
        (4, 2, 'BL'),
        (5, 3, 'TL'),
        (5, 5, 'BL'),
        (6, 1, 'BL'),
        (6, 4, 'TL'),
        (7, 1, 'TR'),
        (7, 3, 'TR'),
        (7, 5, 'TL'),
    ),
    (8, 9): (
        (1, 1, 'TR'),
        (1, 2, 'BL'),
        (1, 4, 'BL'),
        (1, 6, 'BL'),
        (1, 8, 'BL'),
        (2, 3, 'TL'),
        (2, 5, 'TL'),
        (2, 7, 'TL'),
        (3, 1, 'BL'),
        (3, 8, 'TL'),
        (4, 1, 'TR'),
        (4, 3, 'TR'),
        (4, 4, 'BL'),
        (4, 6, 'BL'),
        (5, 5, 'TL'),
        (5, 8, 'BL'),
        (6, 1, 'BL'),
        (6, 3, 'BL'),
        (6, 7, 'BL'),
        (7, 1, 'TR'),
        (7, 3, 'TR'),
        (7, 5, 'TR'),
        (7, 6, 'BL'),
        (7, 8, 'TL'),
    ),
    (9, 9): (
        (1, 1, 'TR'),
        (1, 2, 'BL'),
        (1, 4, 'BL'),
        (1, 6, 'BL'),
        (1, 8, 'BL'),
        (2, 3, 'TL'),
        (2, 5, 'TL'),
        (2, 7, 'TL'),
        (3, 1, 'BL'),
        (3, 8, 'TL'),
        (4, 1, 'TR'),
        (4, 3, 'TR'),
        (4, 4, 'BL'),
        (4, 6, 'BL'),
        (5, 5, 'TL'),
        (5, 8, 'BL'),
        (6, 1, 'TR'),
        (6, 2, 'BL'),
        (6, 4, 'TR'),
        (6, 7, 'BR'),
        (7, 5, 'TL'),
        (7, 8, 'BL'),
        (8, 1, 'TR'),
        (8, 2, 'BL'),
        (8, 4, 'TR'),
        (8, 6, 'TL'),
        (8, 8, 'TR'),
    ),
}
