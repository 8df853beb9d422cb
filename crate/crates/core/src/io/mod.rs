//! File formats: graymaps in, graymaps and CSV tables out.

pub mod pgm;
pub mod profile;
pub mod table;

pub use pgm::{decode_pgm, encode_pgm, read_pgm, write_pgm};
pub use profile::{extract_profile, ProfileLine};
pub use table::{
    emit_csv, format_real, histogram_table, profile_table, read_trace_csv, trace_table, CsvTable,
    Field,
};
