#!/usr/bin/env python3
"""
Launch script - Run from anywhere: python jv.py -n 1 -m 1 el "1/2*u1_1**2"
"""
import os
import sys

# Make the project root importable
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.ui.cli import main

sys.exit(main())
