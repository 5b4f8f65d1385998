from .analysis import Decomposition, MorphAnalysis, TagParser
from .annotator import MorphAnalyzer, morph_annotator
from .decompose import AffixTable, Decomposer, decompose
from .lexicon import LexiconStore, compile_lexicon, lookup
from .sstable import SSTable, StoreHeader

__all__ = [
    "AffixTable", "Decomposer", "Decomposition", "LexiconStore", "MorphAnalysis",
    "MorphAnalyzer", "SSTable", "StoreHeader", "TagParser", "compile_lexicon",
    "decompose", "lookup", "morph_annotator",
]
