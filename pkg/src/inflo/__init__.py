"""inflo: news category labeling and category-conditioned keyphrase extraction."""

__version__ = "0.1.0"
