import random

ALPHABETS = {
    1: b"a",
    2: b"ab",
    4: b"abcd",
    26: b"abcdefghijklmnopqrstuvwxyz",
}


def random_word(rng: random.Random, alphabet: bytes = b"ab", max_len: int = 12, min_len: int = 1) -> bytes:
    n = rng.randint(min_len, max_len)
    return bytes(rng.choice(alphabet) for _ in range(n))


def random_words(rng: random.Random, n: int, alphabet: bytes = b"ab", max_len: int = 12) -> list[bytes]:
    return [random_word(rng, alphabet, max_len) for _ in range(n)]
