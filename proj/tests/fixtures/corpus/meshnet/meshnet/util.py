def chunks(data: bytes, size: int):
    for i in range(0, len(data), size):
        yield data[i:i + size]


def hexid(node_id: bytes, length: int = 8) -> str:
    """Hex id of the node id, truncated to the length."""
    return node_id.hex()[:length]


def clamp(value, lo, hi): return max(lo, min(hi, value))
