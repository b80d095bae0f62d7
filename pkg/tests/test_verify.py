from polyfault.verify import PUBLISHED_C_6x6, run_verify


def test_quick_suite_shape():
    rep = run_verify("quick")
    names = [c.name for c in rep.checks]
    assert len(names) == len(set(names))
    assert all(c.status in ("pass", "fail", "skipped") for c in rep.checks)
    skipped = {c.name for c in rep.checks if c.status == "skipped"}
    assert "6x12 faultfree >= 384" in skipped


def test_r66_guard_recorded():
    rep = run_verify("quick")
    (check,) = [c for c in rep.checks if c.name.startswith("R(6,6)")]
    assert check.expected == str(PUBLISHED_C_6x6)
    assert check.status == ("pass" if check.actual == check.expected else "fail")
    if check.status == "fail":
        assert check.note.startswith("DISCREPANCY")


def test_failures_carry_a_label():
    rep = run_verify("full")
    assert not any(c.status == "skipped" for c in rep.checks)
    for c in rep.failures():
        assert c.note.startswith("DISCREPANCY"), c.name
