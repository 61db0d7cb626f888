//! Induction driver (placeholder).
