"""
Process-wide cache of enumerated corpora
"""
import logging
import os
from typing import Dict, Optional

from ..config import CORPUS_FILE_TEMPLATE, DEFAULT_JOBS, MAX_SUPPORTED_GENUS
from ..enumeration.corpus import Corpus, enumerate_maximal
from ..errors import InputFormatError, PreconditionError
from .helpers import load_json_file, save_json_file


class CorpusCache:
    """Enumerated corpora keyed by genus, optionally backed by corpus-g{g}.json files."""

    def __init__(self, directory: Optional[str] = None, max_genus: int = MAX_SUPPORTED_GENUS):
        """
        Initialize the cache.

        Args:
            directory: where corpus files are read and written; None keeps
                everything in memory
            max_genus: enumeration cap passed to enumerate_maximal
        """
        self.directory = directory
        self.max_genus = max_genus
        self.corpora: Dict[int, Corpus] = {}
        self.logger = logging.getLogger(__name__)

    def path_for(self, genus: int) -> Optional[str]:
        if self.directory is None:
            return None
        return os.path.join(self.directory, CORPUS_FILE_TEMPLATE.format(genus=genus))

    def get(self, genus: int, jobs: int = DEFAULT_JOBS) -> Corpus:
        """Corpus of the given genus, enumerated on first use."""
        if genus in self.corpora:
            return self.corpora[genus]

        corpus = self._load(genus)
        if corpus is None:
            corpus = enumerate_maximal(genus, self.max_genus, jobs)
            self.save(corpus)
        self.corpora[genus] = corpus
        return corpus

    def _load(self, genus: int) -> Optional[Corpus]:
        path = self.path_for(genus)
        if path is None or not os.path.exists(path):
            return None
        try:
            corpus = Corpus.from_dict(load_json_file(path), path)
        except (InputFormatError, PreconditionError) as e:
            self.logger.warning("ignoring corpus file: %s", e)
            return None
        if corpus.genus != genus:
            self.logger.warning("%s holds genus %d, expected %d", path, corpus.genus, genus)
            return None
        self.logger.debug("loaded %d polygons from %s", len(corpus), path)
        return corpus

    def save(self, corpus: Corpus) -> bool:
        path = self.path_for(corpus.genus)
        if path is None:
            return False
        saved = save_json_file(path, corpus)
        if not saved:
            self.logger.warning("could not write %s", path)
        return saved

    def clear(self):
        self.corpora.clear()


# Global corpus cache instance
_corpus_cache = None


def get_corpus_cache() -> CorpusCache:
    """Get global corpus cache instance."""
    global _corpus_cache
    if _corpus_cache is None:
        _corpus_cache = CorpusCache()
    return _corpus_cache
