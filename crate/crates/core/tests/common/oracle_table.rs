//! Jets at order 16 frozen from an independent symbolic computation
//! (`tests/oracle/jets_oracle.py`) before the implementation was written.

pub const ORACLE_ORDER: usize = 16;

/// (metric, quantity, coefficients of t^0..=t^16)
pub const ORACLE_JETS: &[(&str, &str, [&str; 17])] = &[
    ("case1_n4", "H", ["0", "0", "0", "0", "0", "0", "0", "8", "0", "0", "0", "-24", "0", "0", "0", "40", "0"]),
    ("case1_n4", "B2", ["0", "0", "0", "0", "0", "0", "96", "0", "0", "0", "-64", "0", "0", "0", "-160", "0", "0"]),
    ("case1_n4", "Ric", ["0", "0", "0", "0", "0", "0", "-152", "0", "0", "0", "328", "0", "0", "0", "-440", "0", "0"]),
    ("case1_n4", "S_leaf", ["2", "0", "0", "0", "4", "0", "0", "0", "2", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("case1_n4", "S_M", ["2", "0", "0", "0", "4", "0", "-208", "0", "2", "0", "592", "0", "0", "0", "-1104", "0", "0"]),
    ("case1_n4", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "-2", "0", "0", "0", "3"]),
    ("case1_n5", "H", ["0", "0", "0", "0", "0", "0", "0", "32", "0", "0", "0", "-96", "0", "0", "0", "192", "0"]),
    ("case1_n5", "B2", ["0", "0", "0", "0", "0", "0", "256", "0", "0", "0", "-512", "0", "0", "0", "1024", "0", "0"]),
    ("case1_n5", "Ric", ["0", "0", "0", "0", "0", "0", "-480", "0", "0", "0", "1568", "0", "0", "0", "-3904", "0", "0"]),
    ("case1_n5", "S_leaf", ["2", "0", "0", "0", "8", "0", "0", "0", "8", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("case1_n5", "S_M", ["2", "0", "0", "0", "8", "0", "-704", "0", "8", "0", "2624", "0", "0", "0", "-7808", "0", "0"]),
    ("case1_n5", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "4", "0", "0", "0", "-8", "0", "0", "0", "20"]),
    ("case1_n6", "H", ["0", "0", "0", "0", "0", "0", "0", "72", "0", "0", "0", "-264", "0", "0", "0", "744", "0"]),
    ("case1_n6", "B2", ["0", "0", "0", "0", "0", "0", "480", "0", "0", "0", "-1728", "0", "0", "0", "7008", "0", "0"]),
    ("case1_n6", "Ric", ["0", "0", "0", "0", "0", "0", "-984", "0", "0", "0", "4632", "0", "0", "0", "-18168", "0", "0"]),
    ("case1_n6", "S_leaf", ["2", "0", "0", "0", "12", "0", "0", "0", "18", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("case1_n6", "S_M", ["2", "0", "0", "0", "12", "0", "-1488", "0", "18", "0", "7536", "0", "0", "0", "-34512", "0", "0"]),
    ("case1_n6", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "9", "0", "0", "0", "-22", "0", "0", "0", "87"]),
    ("case2_n4", "H", ["0", "0", "0", "0", "0", "0", "0", "24", "0", "0", "0", "-48", "0", "0", "0", "72", "0"]),
    ("case2_n4", "B2", ["0", "0", "0", "0", "0", "0", "96", "0", "0", "0", "-192", "0", "0", "0", "672", "0", "0"]),
    ("case2_n4", "Ric", ["0", "0", "0", "0", "0", "0", "-264", "0", "0", "0", "720", "0", "0", "0", "-1752", "0", "0"]),
    ("case2_n4", "S_leaf", ["-2", "0", "0", "0", "4", "0", "0", "0", "-2", "0", "0", "0", "-4", "0", "0", "0", "8"]),
    ("case2_n4", "S_M", ["-2", "0", "0", "0", "4", "0", "-432", "0", "-2", "0", "1248", "0", "-4", "0", "-3408", "0", "8"]),
    ("case2_n4", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "3", "0", "0", "0", "-4", "0", "0", "0", "9"]),
    ("case2_n5", "H", ["0", "0", "0", "0", "0", "0", "0", "48", "0", "0", "0", "-132", "0", "0", "0", "336", "0"]),
    ("case2_n5", "B2", ["0", "0", "0", "0", "0", "0", "192", "0", "0", "0", "-768", "0", "0", "0", "3744", "0", "0"]),
    ("case2_n5", "Ric", ["0", "0", "0", "0", "0", "0", "-528", "0", "0", "0", "2220", "0", "0", "0", "-8784", "0", "0"]),
    ("case2_n5", "S_leaf", ["-6", "0", "0", "0", "12", "0", "0", "0", "-6", "0", "0", "0", "-12", "0", "0", "0", "24"]),
    ("case2_n5", "S_M", ["-6", "0", "0", "0", "12", "0", "-864", "0", "-6", "0", "3672", "0", "-12", "0", "-16128", "0", "24"]),
    ("case2_n5", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "6", "0", "0", "0", "-11", "0", "0", "0", "39"]),
    ("case3_n5", "H", ["0", "0", "0", "0", "0", "0", "0", "32", "0", "0", "0", "-96", "0", "0", "0", "192", "0"]),
    ("case3_n5", "B2", ["0", "0", "0", "0", "0", "0", "256", "0", "0", "0", "-512", "0", "0", "0", "1024", "0", "0"]),
    ("case3_n5", "Ric", ["0", "0", "0", "0", "0", "0", "-480", "0", "0", "0", "1568", "0", "0", "0", "-3904", "0", "0"]),
    ("case3_n5", "S_leaf", ["0", "0", "0", "0", "16", "0", "0", "0", "-8", "0", "0", "0", "16", "0", "0", "0", "8"]),
    ("case3_n5", "S_M", ["0", "0", "0", "0", "16", "0", "-704", "0", "-8", "0", "2624", "0", "16", "0", "-7808", "0", "8"]),
    ("case3_n5", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "4", "0", "0", "0", "-8", "0", "0", "0", "20"]),
    ("case3_n6", "H", ["0", "0", "0", "0", "0", "0", "0", "72", "0", "0", "0", "-264", "0", "0", "0", "744", "0"]),
    ("case3_n6", "B2", ["0", "0", "0", "0", "0", "0", "480", "0", "0", "0", "-1728", "0", "0", "0", "7008", "0", "0"]),
    ("case3_n6", "Ric", ["0", "0", "0", "0", "0", "0", "-984", "0", "0", "0", "4632", "0", "0", "0", "-18168", "0", "0"]),
    ("case3_n6", "S_leaf", ["0", "0", "0", "0", "60", "0", "0", "0", "6", "0", "0", "0", "48", "0", "0", "0", "24"]),
    ("case3_n6", "S_M", ["0", "0", "0", "0", "60", "0", "-1488", "0", "6", "0", "7536", "0", "48", "0", "-34512", "0", "24"]),
    ("case3_n6", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "9", "0", "0", "0", "-22", "0", "0", "0", "87"]),
    ("torus3_k1", "H", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k1", "B2", ["0", "0", "8", "0", "-16", "0", "24", "0", "-32", "0", "40", "0", "-48", "0", "56", "0", "-64"]),
    ("torus3_k1", "Ric", ["0", "0", "-8", "0", "16", "0", "-24", "0", "32", "0", "-40", "0", "48", "0", "-56", "0", "64"]),
    ("torus3_k1", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k1", "S_M", ["0", "0", "-8", "0", "16", "0", "-24", "0", "32", "0", "-40", "0", "48", "0", "-56", "0", "64"]),
    ("torus3_k1", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k2", "H", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k2", "B2", ["0", "0", "0", "0", "0", "0", "32", "0", "0", "0", "-64", "0", "0", "0", "96", "0", "0"]),
    ("torus3_k2", "Ric", ["0", "0", "0", "0", "0", "0", "-32", "0", "0", "0", "64", "0", "0", "0", "-96", "0", "0"]),
    ("torus3_k2", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k2", "S_M", ["0", "0", "0", "0", "0", "0", "-32", "0", "0", "0", "64", "0", "0", "0", "-96", "0", "0"]),
    ("torus3_k2", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k3", "H", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k3", "B2", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "72", "0", "0", "0", "0", "0", "-144"]),
    ("torus3_k3", "Ric", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-72", "0", "0", "0", "0", "0", "144"]),
    ("torus3_k3", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("torus3_k3", "S_M", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-72", "0", "0", "0", "0", "0", "144"]),
    ("torus3_k3", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k2_m5", "H", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "10", "0", "0", "0", "-14", "0", "0", "0"]),
    ("ptorus_k2_m5", "B2", ["0", "0", "0", "0", "0", "0", "32", "0", "0", "0", "-64", "0", "80", "0", "96", "0", "-192"]),
    ("ptorus_k2_m5", "Ric", ["0", "0", "0", "0", "0", "0", "-32", "0", "-90", "0", "64", "0", "102", "0", "-96", "0", "-114"]),
    ("ptorus_k2_m5", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k2_m5", "S_M", ["0", "0", "0", "0", "0", "0", "-32", "0", "-180", "0", "64", "0", "284", "0", "-96", "0", "-420"]),
    ("ptorus_k2_m5", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "-1", "0", "0"]),
    ("ptorus_k1_m3", "H", ["0", "0", "0", "0", "0", "6", "0", "-8", "0", "10", "0", "-18", "0", "28", "0", "-40", "0"]),
    ("ptorus_k1_m3", "B2", ["0", "0", "8", "0", "-16", "0", "48", "0", "-88", "0", "172", "0", "-312", "0", "520", "0", "-880"]),
    ("ptorus_k1_m3", "Ric", ["0", "0", "-8", "0", "-14", "0", "8", "0", "-2", "0", "26", "0", "-52", "0", "80", "0", "-140"]),
    ("ptorus_k1_m3", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k1_m3", "S_M", ["0", "0", "-8", "0", "-44", "0", "64", "0", "-92", "0", "188", "0", "-320", "0", "496", "0", "-784"]),
    ("ptorus_k1_m3", "area", ["1", "0", "0", "0", "0", "0", "1", "0", "-1", "0", "1", "0", "-1", "0", "1", "0", "-1"]),
    ("ptorus_k2_m3", "H", ["0", "0", "0", "0", "0", "6", "0", "0", "0", "-10", "0", "-6", "0", "14", "0", "16", "0"]),
    ("ptorus_k2_m3", "B2", ["0", "0", "0", "0", "0", "0", "32", "0", "48", "0", "-28", "0", "-128", "0", "-72", "0", "168"]),
    ("ptorus_k2_m3", "Ric", ["0", "0", "0", "0", "-30", "0", "-32", "0", "42", "0", "94", "0", "-54", "0", "-168", "0", "36"]),
    ("ptorus_k2_m3", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k2_m3", "S_M", ["0", "0", "0", "0", "-60", "0", "-32", "0", "132", "0", "124", "0", "-236", "0", "-288", "0", "312"]),
    ("ptorus_k2_m3", "area", ["1", "0", "0", "0", "0", "0", "1", "0", "0", "0", "-1", "0", "0", "0", "1", "0", "0"]),
    ("ptorus_k1_m2", "H", ["0", "0", "0", "4", "0", "-6", "0", "4", "0", "0", "0", "-2", "0", "0", "0", "4", "0"]),
    ("ptorus_k1_m2", "B2", ["0", "0", "8", "0", "0", "0", "0", "0", "-24", "0", "52", "0", "-48", "0", "8", "0", "24"]),
    ("ptorus_k1_m2", "Ric", ["0", "0", "-20", "0", "30", "0", "-28", "0", "24", "0", "-30", "0", "48", "0", "-68", "0", "78"]),
    ("ptorus_k1_m2", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k1_m2", "S_M", ["0", "0", "-32", "0", "60", "0", "-72", "0", "72", "0", "-76", "0", "96", "0", "-128", "0", "156"]),
    ("ptorus_k1_m2", "area", ["1", "0", "0", "0", "1", "0", "-1", "0", "1", "0", "-1", "0", "1", "0", "-1", "0", "1"]),
    ("ptorus_k2_m4", "H", ["0", "0", "0", "0", "0", "0", "0", "8", "0", "0", "0", "-12", "0", "0", "0", "8", "0"]),
    ("ptorus_k2_m4", "B2", ["0", "0", "0", "0", "0", "0", "32", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k2_m4", "Ric", ["0", "0", "0", "0", "0", "0", "-88", "0", "0", "0", "132", "0", "0", "0", "-120", "0", "0"]),
    ("ptorus_k2_m4", "S_leaf", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("ptorus_k2_m4", "S_M", ["0", "0", "0", "0", "0", "0", "-144", "0", "0", "0", "264", "0", "0", "0", "-304", "0", "0"]),
    ("ptorus_k2_m4", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "-1", "0", "0", "0", "1"]),
    ("intro_k1", "H", ["0", "2", "0", "-2", "0", "2", "0", "-2", "0", "2", "0", "-2", "0", "2", "0", "-2", "0"]),
    ("intro_k1", "B2", ["0", "0", "2", "0", "-4", "0", "6", "0", "-8", "0", "10", "0", "-12", "0", "14", "0", "-16"]),
    ("intro_k1", "Ric", ["-2", "0", "4", "0", "-6", "0", "8", "0", "-10", "0", "12", "0", "-14", "0", "16", "0", "-18"]),
    ("intro_k1", "S_leaf", ["2", "0", "-2", "0", "2", "0", "-2", "0", "2", "0", "-2", "0", "2", "0", "-2", "0", "2"]),
    ("intro_k1", "S_M", ["-2", "0", "4", "0", "-6", "0", "8", "0", "-10", "0", "12", "0", "-14", "0", "16", "0", "-18"]),
    ("intro_k1", "area", ["1", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("intro_k2", "H", ["0", "0", "0", "4", "0", "0", "0", "-4", "0", "0", "0", "4", "0", "0", "0", "-4", "0"]),
    ("intro_k2", "B2", ["0", "0", "0", "0", "0", "0", "8", "0", "0", "0", "-16", "0", "0", "0", "24", "0", "0"]),
    ("intro_k2", "Ric", ["0", "0", "-12", "0", "0", "0", "20", "0", "0", "0", "-28", "0", "0", "0", "36", "0", "0"]),
    ("intro_k2", "S_leaf", ["2", "0", "0", "0", "-2", "0", "0", "0", "2", "0", "0", "0", "-2", "0", "0", "0", "2"]),
    ("intro_k2", "S_M", ["2", "0", "-24", "0", "-2", "0", "32", "0", "2", "0", "-40", "0", "-2", "0", "48", "0", "2"]),
    ("intro_k2", "area", ["1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("mm_sphere", "H", ["0", "0", "0", "4", "0", "0", "0", "-4", "0", "0", "0", "4", "0", "0", "0", "-4", "0"]),
    ("mm_sphere", "B2", ["0", "0", "0", "0", "0", "0", "8", "0", "0", "0", "-16", "0", "0", "0", "24", "0", "0"]),
    ("mm_sphere", "Ric", ["0", "0", "-12", "0", "0", "0", "20", "0", "0", "0", "-28", "0", "0", "0", "36", "0", "0"]),
    ("mm_sphere", "S_leaf", ["2", "0", "0", "0", "-2", "0", "0", "0", "2", "0", "0", "0", "-2", "0", "0", "0", "2"]),
    ("mm_sphere", "S_M", ["2", "0", "-24", "0", "-2", "0", "32", "0", "2", "0", "-40", "0", "-2", "0", "48", "0", "2"]),
    ("mm_sphere", "area", ["1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "H", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "B2", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "Ric", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "S_leaf", ["6", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "S_M", ["6", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("positive_sigma_n5", "area", ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
];
