//! Constructive configuration lemmas (placeholder).
