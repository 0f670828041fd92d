//! Frozen reference values for the two counting sequences: rows
//! `(n, A_n, N_n)` for `n = 1..=60`, the published table both sequences are
//! checked against. Rows above 40 are out of enumeration range for the
//! acceptance suite and serve the identity-based regression checks.

pub const TABLE1: [(u32, u64, u64); 60] = [
    (1, 1, 1),
    (2, 0, 1),
    (3, 1, 2),
    (4, 1, 2),
    (5, 4, 5),
    (6, 2, 4),
    (7, 10, 11),
    (8, 8, 10),
    (9, 19, 21),
    (10, 17, 22),
    (11, 50, 51),
    (12, 35, 40),
    (13, 105, 106),
    (14, 92, 103),
    (15, 194, 200),
    (16, 195, 205),
    (17, 464, 465),
    (18, 382, 405),
    (19, 960, 961),
    (20, 877, 900),
    (21, 1816, 1828),
    (22, 1862, 1913),
    (23, 4095, 4096),
    (24, 3530, 3578),
    (25, 8268, 8273),
    (26, 8069, 8175),
    (27, 16111, 16132),
    (28, 16163, 16267),
    (29, 34902, 34903),
    (30, 31603, 31822),
    (31, 70853, 70854),
    (32, 68476, 68681),
    (33, 137339, 137391),
    (34, 140196, 140661),
    (35, 292066, 292081),
    (36, 269817, 270258),
    (37, 591442, 591443),
    (38, 581492, 582453),
    (39, 1155905, 1156012),
    (40, 1160411, 1161319),
    (41, 2425710, 2425711),
    (42, 2285281, 2287203),
    (43, 4889433, 4889434),
    (44, 4783757, 4785671),
    (45, 9574948, 9575167),
    (46, 9674748, 9678844),
    (47, 19919901, 19919902),
    (48, 18893119, 18896892),
    (49, 40010840, 40010851),
    (50, 39437596, 39445886),
    (51, 78793811, 78794277),
    (52, 78922130, 78930306),
    (53, 162306074, 162306075),
    (54, 155991666, 156008182),
    (55, 325800242, 325800297),
    (56, 320507004, 320523279),
    (57, 643198150, 643199112),
    (58, 644611930, 644646833),
    (59, 1317118755, 1317118756),
    (60, 1269732856, 1269765591),
];
