//! IO companion for `curveforge-core`: text file formats, machine-readable
//! run reports, the bundled q=7 arc data, and the paper-verification
//! suite behind the CLI.

pub mod datasets;
pub mod formats;
pub mod report;
pub mod verify;

/// The CLI subcommand table.
pub const SUBCOMMANDS: &[&str] = &[
    "points",
    "points-ext",
    "spectrum",
    "point-type",
    "zset",
    "sziklai-check",
    "arc-import",
    "arc-export",
    "code",
    "weights",
    "weight-check",
    "equiv",
    "nu-q",
    "frobenius",
    "sv-bound",
    "inflections",
    "noether",
    "solve",
    "verify-paper",
];

/// Which subcommand reaches each library operation (directly or through
/// its call graph). Exercised by the CLI coverage test.
pub const OPERATION_COVERAGE: &[(&str, &str)] = &[
    ("gf.make_field", "points"),
    ("gf.field_arith", "points"),
    ("gf.embed", "points-ext"),
    ("gf.enumerate_elements", "nu-q"),
    ("projplane.enumerate_points", "points"),
    ("projplane.line_through", "equiv"),
    ("projplane.pencil", "point-type"),
    ("hpoly.evaluate", "points"),
    ("hpoly.partials", "frobenius"),
    ("hpoly.restrict_to_line", "sziklai-check"),
    ("hpoly.exact_divide", "frobenius"),
    ("hpoly.substitute", "equiv"),
    ("curve.rational_points", "points"),
    ("curve.count_points_ext", "points-ext"),
    ("curve.linear_component_check", "sziklai-check"),
    ("curve.singular_points_check", "sv-bound"),
    ("curve.tangent_and_multiplicity", "inflections"),
    ("curve.family_catalog", "points"),
    ("arcs.spectrum", "spectrum"),
    ("arcs.point_type", "point-type"),
    ("arcs.complement_zset", "zset"),
    ("arcs.verify_arc_lemmas", "spectrum"),
    ("codes.code_from_arc", "code"),
    ("codes.weight_enumerator", "weights"),
    ("codes.spectrum_weight_check", "weight-check"),
    ("equiv.apply", "equiv"),
    ("equiv.are_equivalent", "equiv"),
    ("equiv.count_family_classes", "nu-q"),
    ("svfrob.frobenius_classical", "frobenius"),
    ("svfrob.sv_basic_bound", "sv-bound"),
    ("svfrob.sv_refined_bound", "sv-bound"),
    ("svfrob.inflection_points", "inflections"),
    ("linsolve.solve", "solve"),
    ("linsolve.noether_reconstruct", "noether"),
    ("cli.run", "verify-paper"),
];
