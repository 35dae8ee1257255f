FEE_TABLE = {"wire": 2.5, "card": 0.0}


def fee_for(kind: str, amount: float) -> float:
    """Flat fee for kind plus 0.1% of amount, capped at 25.

    Unknown kinds are free; the table lists only the chargeable ones.
    """
    return min(FEE_TABLE.get(kind, 0.0) + amount * 0.001, 25.0)


def waive_fee(account, reason: str = "goodwill"):
    """Waive the fee for the account with the reason."""
    account.fee_waiver = reason


def fee_summary(fees):
    return {k: sum(v) for k, v in fees.items()}
