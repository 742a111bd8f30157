#!/usr/bin/env python3
"""Distance matrix over a small synthetic text corpus, for each mapper.

Documents are random mixtures of a few vocabularies, so documents sharing a
vocabulary should come out closer under the n-gram window mapper.
"""
import argparse

import numpy as np

from setdist.corpus import Document, emit, encode, matrix
from setdist.mappers import BinaryString, MapperConfig

VOCABS = [
    "the cat sat on the mat and the dog lay by the door".split(),
    "prime numbers divide only by one and by themselves".split(),
    "waves break on the shore under a grey winter sky".split(),
]


def make_corpus(n_docs, n_words, rng):
    docs = []
    for i in range(n_docs):
        vocab = VOCABS[i % len(VOCABS)]
        text = " ".join(rng.choice(vocab, size=n_words)).encode("ascii")
        payload = encode(text, "ascii7")
        label = f"v{i % len(VOCABS)}_{i:02d}"
        docs.append(Document(label, BinaryString(payload.bits, label), len(text)))
    return docs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--docs", type=int, default=6)
    parser.add_argument("--words", type=int, default=40)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    docs = make_corpus(args.docs, args.words, np.random.default_rng(args.seed))
    configs = {
        "chunk k=14": MapperConfig("chunk", k=14),
        "window 3x7": MapperConfig("window", symbol_width=7, window_symbols=3),
        "lz76": MapperConfig("lz76"),
    }
    for name, cfg in configs.items():
        print(f"# {name}")
        print(emit(matrix(docs, cfg), "tsv").decode(), end="")
        print()


if __name__ == "__main__":
    main()
