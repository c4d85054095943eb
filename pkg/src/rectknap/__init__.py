"""rectknap: exact and structured solvers for 2D geometric knapsack with rotations."""

__version__ = "0.1.0"
