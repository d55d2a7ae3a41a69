"""Document listing for repetitive collections via a grammar-compressed document array."""
from .corpus import DocumentCollection, doc_of, load_documents
from .errors import DocListError
from .gcda import CoverSegment, access, cover, extract
from .listing import (
    Index,
    QueryStats,
    build_index,
    list_documents,
    list_documents_brute_c,
    list_documents_brute_d,
    merge_distinct,
)
from .repair import Grammar, build_grammar, complete, compress, decompress
from .suffix_index import SuffixStructures, build_suffix_array, pattern_range

__version__ = "0.1.0"

__all__ = [
    "CoverSegment", "DocListError", "DocumentCollection", "Grammar", "Index", "QueryStats",
    "SuffixStructures", "access", "build_grammar", "build_index", "build_suffix_array",
    "complete", "compress", "cover", "decompress", "doc_of", "extract", "list_documents",
    "list_documents_brute_c", "list_documents_brute_d", "load_documents", "merge_distinct",
    "pattern_range",
]
