"""MIMO link-level simulator with adversarially trained cycle-consistent detectors.

The package is organized by subsystem:

- ``cyclemimo.nn``        minimal dense-network engine with manual backprop and Adam
- ``cyclemimo.channel``   sum-of-sinusoids fading generators and AWGN
- ``cyclemimo.link``      QPSK, SVD precoding, amplifier distortion, block assembly
- ``cyclemimo.detectors`` preprocessing, LMMSE, and the neural detectors
- ``cyclemimo.harness``   seeded Monte-Carlo experiment runner and CSV output
"""

__version__ = "0.1.0"
