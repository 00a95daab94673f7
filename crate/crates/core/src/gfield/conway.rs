//! Conway polynomials, coefficients lowest degree first (monic).

pub(crate) static CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 1, &[9, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 1, &[11, 1]),
    (13, 2, &[2, 12, 1]),
    (17, 1, &[14, 1]),
    (19, 1, &[17, 1]),
    (23, 1, &[18, 1]),
    (29, 1, &[27, 1]),
    (31, 1, &[28, 1]),
    (37, 1, &[35, 1]),
    (41, 1, &[35, 1]),
    (43, 1, &[40, 1]),
    (47, 1, &[42, 1]),
    (53, 1, &[51, 1]),
    (59, 1, &[57, 1]),
    (61, 1, &[59, 1]),
    (67, 1, &[65, 1]),
    (71, 1, &[64, 1]),
    (73, 1, &[68, 1]),
    (79, 1, &[76, 1]),
    (83, 1, &[81, 1]),
    (89, 1, &[86, 1]),
    (97, 1, &[92, 1]),
    (101, 1, &[99, 1]),
    (103, 1, &[98, 1]),
    (107, 1, &[105, 1]),
    (109, 1, &[103, 1]),
    (113, 1, &[110, 1]),
    (127, 1, &[124, 1]),
    (131, 1, &[129, 1]),
    (137, 1, &[134, 1]),
    (139, 1, &[137, 1]),
    (149, 1, &[147, 1]),
    (151, 1, &[145, 1]),
    (157, 1, &[152, 1]),
    (163, 1, &[161, 1]),
    (167, 1, &[162, 1]),
    (173, 1, &[171, 1]),
    (179, 1, &[177, 1]),
    (181, 1, &[179, 1]),
    (191, 1, &[172, 1]),
    (193, 1, &[188, 1]),
    (197, 1, &[195, 1]),
    (199, 1, &[196, 1]),
    (211, 1, &[209, 1]),
    (223, 1, &[220, 1]),
    (227, 1, &[225, 1]),
    (229, 1, &[223, 1]),
    (233, 1, &[230, 1]),
    (239, 1, &[232, 1]),
    (241, 1, &[234, 1]),
    (251, 1, &[245, 1]),
];
