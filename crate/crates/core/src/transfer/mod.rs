//! Cycle-transfer lemmas (placeholder).
