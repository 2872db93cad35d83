pub use nilg2_core;
