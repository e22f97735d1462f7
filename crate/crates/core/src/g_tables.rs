//! Dipath literals for the four residues `p`, raw indices (reduce modulo `m`
//! when instantiating). Keyed by name: `W0` is `W` of the set `L0`.

pub(crate) const P11: [(&str, &str); 32] = [
    ("W0", "x0 x3 x4 y7 x7 y8 y11"),
    ("X0", "y0 y1 y4 y5 x8 x11"),
    ("Y0", "x1 y2 x5 x6 x9 x10 y10 x13"),
    ("Z0", "x2 y3 y6 y9 x12"),
    ("Q0", "y11 y14 y17 y18 y19 x22 y23"),
    ("R0", "x11 y12 y13 x16 x17 y20 x23"),
    ("S0", "x13 x14 x15 y16 x19 x20 x21 y22 x25"),
    ("T0", "x12 y15 x18 y21 x24"),
    ("W1", "x0 y1 x4 y5 y8 y9 x9 x12"),
    ("X1", "x1 y4 x7 y10 x11"),
    ("Y1", "y0 y3 x3 x6 y6 y7 x10 y13"),
    ("Z1", "y2 x2 x5 x8 y11"),
    ("Q1", "x12 y12 y15 x15 x18 y18 y21 x21 x24"),
    ("R1", "x11 y14 x17 x20 x23"),
    ("S1", "y13 x13 y16 x16 y19 x19 y22 x22 y25"),
    ("T1", "y11 x14 y17 y20 y23"),
    ("W2", "x0 y3 x6 y9 y10 y11"),
    ("X2", "y0 x3 y4 y7 x8 y8 x11"),
    ("Y2", "y1 x1 x4 x7 x10 x13"),
    ("Z2", "x2 y2 y5 x5 y6 x9 y12"),
    ("Q2", "y11 x12 y13 y16 y17 x20 y23"),
    ("R2", "x11 x14 x17 x18 y19 y22 x23"),
    ("S2", "x13 y14 y15 x16 x19 y20 y21 x22 x25"),
    ("T2", "y12 x15 y18 x21 y24"),
    ("X3", "x0 y0 x1 y1 x2 x3 y6 x7 x8 y9 x10 x11"),
    ("Y3", "y2 y3 x4 y4 x5 y5 x6 y7 y8 x9 y10 y13"),
    ("R3", "x11 y11 y12 x12 x13 x16 y17 x17 y18 x18 x19 x22 x23"),
    ("S3", "y13 x14 y14 x15 y15 y16 y19 x20 y20 x21 y21 y22 y25"),
    ("X4", "y0 x0 x1 x2 y5 y6 x6 x7 y7 y10 x10 y11"),
    ("Y4", "y1 y2 x3 y3 y4 x4 x5 y8 x8 x9 y9 y12"),
    ("R4", "y11 x11 x12 x15 x16 y16 x17 y17 x18 x21 x22 y22 y23"),
    ("S4", "y12 x13 y13 y14 x14 y15 y18 x19 y19 y20 x20 y21 y24"),
];

pub(crate) const P13: [(&str, &str); 32] = [
    ("W0", "y0 x1 x2 y5 x6 x9 y12 x13"),
    ("X0", "x0 y3 y4 y7 y10 x10 y13"),
    ("Y0", "y1 x4 x5 x8 y9 x12 y15"),
    ("Z0", "y2 x3 y6 x7 y8 x11 y11 y14"),
    ("Q0", "x13 y16 y19 x20 x21 y24 x25"),
    ("R0", "y13 x14 x15 y18 x19 y22 y25"),
    ("S0", "y15 x16 y17 x18 y21 x22 y23 x24 y27"),
    ("T0", "y14 x17 y20 x23 y26"),
    ("W1", "x0 y0 x3 x6 x7 y10 y11 x14"),
    ("X1", "x1 y4 x5 y6 y9 x10 x13"),
    ("Y1", "y2 y5 x8 x11 y14"),
    ("Z1", "y1 x2 y3 x4 y7 y8 x9 x12 y12 y15"),
    ("Q1", "x14 x17 x20 x23 x26"),
    ("R1", "x13 y13 y16 x16 x19 y19 y22 x22 x25"),
    ("S1", "y14 y17 y20 y23 y26"),
    ("T1", "y15 x15 x18 y18 y21 x21 x24 y24 y27"),
    ("W2", "x0 x3 y3 y6 x9 y10 y13"),
    ("X2", "y0 y1 y4 x7 x8 y11 x12 x13"),
    ("Y2", "x2 y2 x5 x6 y7 x10 x11 x14"),
    ("Z2", "x1 x4 y5 y8 y9 y12 x15"),
    ("Q2", "y13 y14 y15 x18 x19 x22 y25"),
    ("R2", "x13 x16 y19 y20 y21 x24 x25"),
    ("S2", "x14 y17 x20 y23 x26"),
    ("T2", "x15 y16 x17 y18 x21 y22 x23 y24 x27"),
    ("X3", "y0 x0 y1 x1 y2 y3 x6 y6 y7 x7 x10 y11 y12 y13"),
    ("Y3", "x2 x3 x4 y4 y5 x5 y8 x8 x9 y9 y10 x11 x12 x15"),
    ("R3", "y13 x13 y14 x14 y15 y18 y19 x19 y20 x20 y21 y24 y25"),
    ("S3", "x15 x16 y16 y17 x17 x18 x21 x22 y22 y23 x23 x24 x27"),
    ("X4", "x0 x1 y1 y2 x2 x5 y5 y6 x6 y9 x9 x10 y10 x13"),
    ("Y4", "y0 y3 x3 y4 x4 x7 y7 x8 y8 y11 x11 y12 x12 y13"),
    ("R4", "x13 x14 y14 x15 y15 y16 x19 x20 y20 x21 y21 y22 x25"),
    ("S4", "y13 x16 x17 y17 y18 x18 y19 x22 x23 y23 y24 x24 y25"),
];

pub(crate) const P17: [(&str, &str); 32] = [
    ("W0", "y0 x0 y3 x6 y7 x8 x11 y12 x15 x18"),
    ("X0", "x1 y2 x5 y6 y9 x10 x13 y14 y17"),
    ("Y0", "y1 y4 y5 y8 x9 x12 y13 y16 x16 x19"),
    ("Z0", "x2 x3 x4 x7 y10 y11 x14 y15 y18"),
    ("Q0", "x18 y21 x24 y27 x30"),
    ("R0", "y17 x17 y20 x20 y23 x23 y26 x26 y29"),
    ("S0", "x19 y19 x22 y22 x25 y25 x28 y28 x31"),
    ("T0", "y18 x21 y24 x27 y30"),
    ("W1", "x1 x4 y4 x7 y7 x10 y10 y13 y14 x17"),
    ("X1", "x0 x3 y3 y6 x6 x9 y12 y15 x18"),
    ("Y1", "y0 y1 y2 y5 x8 y11 x11 x14 x15 y16 x19"),
    ("Z1", "x2 x5 y8 y9 x12 x13 x16 y17"),
    ("Q1", "x17 y18 y19 y22 x23 y24 y25 y28 x29"),
    ("R1", "x18 x21 x24 x27 x30"),
    ("S1", "x19 x20 y21 x22 x25 x26 y27 x28 x31"),
    ("T1", "y17 y20 y23 y26 y29"),
    ("W2", "y0 x3 x6 x7 y8 y11 y14 x14 x17"),
    ("X2", "x0 x1 y4 x5 x8 y9 y12 x13 y16 y17"),
    ("Y2", "y1 x2 y5 y6 x9 x10 y13 x16 y19"),
    ("Z2", "y2 y3 x4 y7 y10 x11 x12 y15 x15 y18"),
    ("Q2", "x17 x18 x19 y22 y23 x26 x29"),
    ("R2", "y17 x20 x23 x24 x25 y28 y29"),
    ("S2", "y19 y20 x21 x22 y25 y26 x27 x28 y31"),
    ("T2", "y18 y21 y24 y27 y30"),
    ("X3", "x0 y0 x1 y1 x4 y5 x5 x6 y6 x7 x10 x11 y11 y12 x12 x15 x16 x17"),
    ("Y3", "y2 x2 y3 x3 y4 y7 y8 x8 x9 y9 y10 x13 y13 x14 y14 y15 y16 y19"),
    ("R3", "x17 y17 x18 y18 x19 x22 x23 y23 x24 y24 x25 x28 x29"),
    ("S3", "y19 x20 y20 y21 x21 y22 y25 x26 y26 y27 x27 y28 y31"),
    ("X4", "x0 y1 x1 x2 y2 x3 y6 y7 x7 x8 y8 x11 y14 x15 y15 x16 y16 x17"),
    ("Y4", "y0 y3 y4 x4 x5 y5 x6 y9 x9 y10 x10 y11 x12 y12 y13 x13 x14 y17"),
    ("R4", "x17 x20 x21 y21 y22 x22 y23 y24 x24 y25 x25 y26 x29"),
    ("S4", "y17 y18 x18 y19 x19 y20 x23 x26 x27 y27 y28 x28 y29"),
];

pub(crate) const P19: [(&str, &str); 32] = [
    ("W0", "y0 y1 x4 y4 y7 x10 x13 y14 y17 x20"),
    ("X0", "x1 y2 y5 y6 x7 y10 x11 y12 y13 y16 y19"),
    ("Y0", "x0 y3 x3 x6 y9 x9 x12 y15 x18 x21"),
    ("Z0", "x2 x5 y8 x8 y11 x14 x15 x16 x17 y18 x19"),
    ("Q0", "x20 y21 x22 y23 x26 y27 x28 y29 x32"),
    ("R0", "y19 y22 y25 y28 y31"),
    ("S0", "x21 x24 x27 x30 x33"),
    ("T0", "x19 y20 x23 y24 x25 y26 x29 y30 x31"),
    ("W1", "y2 x2 y5 x8 y9 y12 x12 y13 x16 y17 x17 x20"),
    ("X1", "x1 x4 x7 y8 x11 x14 y15 y18 y21"),
    ("Y1", "x0 y1 y4 x5 y6 x9 x10 y11 y14 x15 x18 y19"),
    ("Z1", "y0 x3 y3 x6 y7 y10 x13 y16 x19"),
    ("Q1", "x20 x21 y22 x23 x26 x27 y28 x29 x32"),
    ("R1", "y21 y24 y27 y30 y33"),
    ("S1", "y19 y20 y23 x24 x25 x28 y31"),
    ("T1", "x19 x22 y25 y26 y29 x30 x31"),
    ("W2", "y2 x5 y5 x6 x9 y10 y13 x13 x14 y17 y20"),
    ("X2", "y1 x1 y4 x7 x10 x11 y14 x17 x18 y21"),
    ("Y2", "x0 y0 y3 y6 y9 x12 x15 y18 x21"),
    ("Z2", "x2 x3 x4 y7 x8 y8 y11 y12 y15 y16 x16 x19"),
    ("Q2", "y20 x20 x23 y23 y26 x26 x29 y29 y32"),
    ("R2", "y21 x24 y27 x30 y33"),
    ("S2", "x21 y24 x27 y30 x33"),
    ("T2", "x19 y19 x22 y22 x25 y25 x28 y28 x31"),
    ("X3", "y0 x1 y1 x2 y2 y3 x4 x5 x6 y6 y7 x7 x8 x11 y11 x12 y12 x13 x16 y19"),
    ("Y3", "x0 x3 y4 y5 y8 x9 y9 y10 x10 y13 x14 y14 y15 x15 y16 x17 y17 y18 x18 x19"),
    ("R3", "y19 x20 y20 y21 x21 x22 x25 y28 y29 x29 x30 y30 y31"),
    ("S3", "x19 y22 y23 x23 x24 y24 y25 x26 y26 y27 x27 x28 x31"),
    ("X4", "y1 y2 x3 y6 x6 x7 y7 y8 y9 x10 y10 y11 x11 x12 x13 y13 y14 x14 x17 y20"),
    ("Y4", "y0 x0 x1 x2 y3 y4 x4 y5 x5 x8 x9 y12 x15 y15 x16 y16 y17 x18 y18 y19"),
    ("R4", "y20 x21 y21 y22 x22 x23 y26 x27 y27 y28 x28 x29 y32"),
    ("S4", "y19 x19 x20 y23 y24 x24 y25 x25 x26 y29 y30 x30 y31"),
];

pub(crate) fn raw(p: u32) -> Option<&'static [(&'static str, &'static str); 32]> {
    match p {
        11 => Some(&P11),
        13 => Some(&P13),
        17 => Some(&P17),
        19 => Some(&P19),
        _ => None,
    }
}
