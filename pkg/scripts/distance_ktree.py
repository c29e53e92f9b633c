#!/usr/bin/env python3
"""
CLI script for distance spectra, spanning k-trees and verification campaigns
"""
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.cli.commands import run_cli


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == '__main__':
    main()
