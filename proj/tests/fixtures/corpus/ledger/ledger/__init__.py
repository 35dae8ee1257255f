from .accounts import Account, open_account
from .money import Money

__all__ = ["Account", "Money", "open_account"]
__version__ = "2.4.1"
