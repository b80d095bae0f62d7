from polyfault.enumeration import iter_tilings
from polyfault.generative import construct_faultfree
from polyfault.render import ascii_art, piece_symbol, render_svg, save_figure


def test_ascii_letters_identify_pieces():
    t = construct_faultfree(12, 15)
    art = ascii_art(t)
    rows = art.splitlines()
    assert len(rows) == 12 and all(len(r) == 15 for r in rows)
    assert len(set(art) - {"\n"}) == 12 * 15 // 3
    owner = t.cell_owner()
    for (r, c), k in owner.items():
        assert rows[r - 1][c - 1] == piece_symbol(k)


def test_symbols_are_distinct():
    syms = [piece_symbol(k) for k in range(500)]
    assert len(set(syms)) == 500 and all(s.isprintable() for s in syms)


def test_svg_is_deterministic(tmp_path):
    t = next(iter_tilings((4, 6)))
    a, b = render_svg(t), render_svg(t)
    assert a == b and a.lstrip().startswith("<?xml") and "<svg" in a
    save_figure(t, tmp_path / "x.svg")
    assert (tmp_path / "x.svg").read_text() == a
    save_figure(t, str(tmp_path / "x.png"))
    assert (tmp_path / "x.png").stat().st_size > 0
