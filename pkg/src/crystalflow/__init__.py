"""crystalflow: rigid-body molecular crystal generation via flow matching.

Subpackages cover the geometry kernels (manifold), all-atom <-> rigid-body
conversion (crystal), auxiliary molecular descriptors (descriptors), the
flow-matching math (flowmatch), trainable networks on a minimal reverse-mode
tape (autodiff, net), annealed ODE sampling (sampler), structure-matching
metrics (evalmetrics), and the CLI with its file formats (dataio, config,
cli).
"""

__version__ = "0.1.0"
