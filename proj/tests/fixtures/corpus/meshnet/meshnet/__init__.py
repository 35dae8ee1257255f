from .peer import Peer
from .router import Router
