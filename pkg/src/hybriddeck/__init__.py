"""Hybrid k-deck reconstruction of binary sequences from zero-deleted traces."""
from .seqcore import (BinarySequence, as_sequence, delete_zeros, from_profile,
                      ones_before, to_profile)
from .deck import (Deck, InconsistentDeckError, compute_deck, deck_downscale,
                   deck_fingerprint, pattern_count, power_sums, subsequence_count)
from .reconstruct import (ReconstructionError, reconstruct_single_trace,
                          vt_checksum, vt_decode_zero_deletion)
from .multitrace import TraceSet, aggregate, reconstruct_multi
from .balls import deletion_ball, deletion_ball_size, insertion_ball
from .search import BoundCertificate, f_nt, f_ntM

__version__ = "0.1.0"
