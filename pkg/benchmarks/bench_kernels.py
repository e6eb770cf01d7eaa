#!/usr/bin/env python3
"""Standalone entry point for the kernel benchmark (same as `foldmap bench`)."""

import argparse

from foldmap.bench import run_bench

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    run_bench(parser.parse_args().repeat)
