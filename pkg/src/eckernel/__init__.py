"""Kernelization toolkit for edge-coloring problems.

Provides reduction-rule kernels for the problems ECS (maximum
edge-colorable subgraph), Multi-STC (multi strong triadic closure) and
their edge-list variants, together with an exact branch-and-bound
oracle, a constructive Delta+1 edge colorer, a DIMACS-inspired instance
format and the random-instance test harness.
"""

from eckernel.graph import Graph

__all__ = ["Graph"]
__version__ = "0.1.0"
