// Generated by green_values.py; do not edit.

/// (label, x1, x2, k1, k2, energy, variant, re g, im g)
pub const GREEN: [(&str, f64, f64, f64, f64, f64, &str, f64, f64); 12] = [
    ("t2_reference_point", 0.5, 2.0, 1.25, 0.75, 1.0, "T2", 0.029413092674947876, -0.021221088726398434),
    ("t1_a2", 1.7, 0.4, 1.25, 0.75, 1.0, "T1", 0.039475482965657689, 0.063782883617665209),
    ("t1_on_axis", 1.0, 0.0, 1.25, 0.75, 1.0, "T1", -0.023247343020023583, 0.069964498550949743),
    ("t1_diag", 1.0, 1.0, 1.25, 0.75, 1.0, "T1", -0.0036445470340604938, 0.010968518228675189),
    ("t3_a7", 0.6, -1.9, 1.25, 0.75, 1.0, "T3", -0.08753883883733176, 0.081550872368472948),
    ("t3_axis", 0.0, -1.4, 1.25, 0.75, 1.0, "T3", -0.15875303816529689, 0.0),
    ("t2_axis", 0.0, 1.4, 1.25, 0.75, 1.0, "T2", 0.068192716340822109, 0.0),
    ("t1_near_circle", 1.5, 0.3, -1.000049504950495, 0.00995049504950495, 1.0, "T1", -0.004772636589822146, -0.06737185464891617),
    ("t3_near_circle", 0.5, -1.2, -1.000049504950495, 0.00995049504950495, 1.0, "T3", -0.19774344818516423, -0.10803409360728157),
    ("t2_near_circle", 0.5, 1.2, -1.000049504950495, 0.00995049504950495, 1.0, "T2", 0.072816253319774329, 0.039782040818433671),
    ("t1_scaled", 1.8, -0.6, 0.25, 0.15, 0.04, "T1", 0.029346842135168666, -0.014176140753243267),
    ("t3_scaled", 0.4, -2.0, 0.25, 0.15, 0.04, "T3", -0.030874434152930319, 0.0030977762265580988),
];

/// T2 integral at (0.5, 2.0) truncated at t = 7.
pub const T2_TRUNCATED: (f64, f64) = (0.029413096102759987, -0.021221091199511538);
