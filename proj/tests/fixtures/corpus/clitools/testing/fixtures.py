def main():
    """Fixture main."""
