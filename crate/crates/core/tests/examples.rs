macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        #[path = $file]
        mod $module;

        #[test]
        fn $test() {
            $module::run_example().expect("example runs");
        }
    };
}

example!(
    separating_frames,
    separating_frames_runs,
    "../examples/separating_frames.rs"
);
example!(
    formula_parsing,
    formula_parsing_runs,
    "../examples/formula_parsing.rs"
);
example!(
    congruence_lattice,
    congruence_lattice_runs,
    "../examples/congruence_lattice.rs"
);
example!(
    grid_generation,
    grid_generation_runs,
    "../examples/grid_generation.rs"
);
example!(
    finite_model,
    finite_model_runs,
    "../examples/finite_model.rs"
);
example!(
    s52_translation,
    s52_translation_runs,
    "../examples/s52_translation.rs"
);
example!(
    three_layer_recurrence,
    three_layer_recurrence_runs,
    "../examples/three_layer_recurrence.rs"
);
example!(
    frame_documents,
    frame_documents_runs,
    "../examples/frame_documents.rs"
);
