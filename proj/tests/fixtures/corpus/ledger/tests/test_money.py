from ledger.money import Money


def test_add():
    """Adding two amounts."""
    assert Money(1) + Money(2) == Money(3)
