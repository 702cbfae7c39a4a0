# keeps the tests directory importable for the oracle helpers
