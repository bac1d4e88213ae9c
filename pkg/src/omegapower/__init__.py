"""Infinite powers A^oo of dictionaries: membership, classification, ranks and reductions."""
from .dictionary import (
    AllWords,
    Concat,
    Diff,
    Dictionary,
    Ext,
    Finite,
    Letter,
    OracleDictionary,
    Star,
    StarWords,
    Union,
    chain_decomposition,
    half_ones_dictionary,
    is_antichain,
    is_code,
)
from .engine import (
    Alive,
    Dead,
    OmegaAcceptor,
    SafetyAutomaton,
    build_omega,
    build_safety,
    equivalent,
    greedy_decompose,
    included,
    is_universal,
    member_lasso,
    minimal_generator,
    run_safety,
    topo_class,
)
from .formats import load_dictionary, parse_dictionary_text
from .rank import Member, Rank, e_level, member_positions, position_graph, rank_lasso, rank_summary
from .streams import Lasso, OmegaStream, alpha0, lasso_normalize, lasso_shift
from .words import Alphabet, Word, format_word, parse_word

__version__ = "0.1.0"
