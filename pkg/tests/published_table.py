"""Transcription of the published improved-bounds table (k,d <= 20, d-k >= 2).

Columns: k, d, best-known lower bound, best prior upper bound,
new upper bound, and whether the h-shell refinement strictly won (*).
"""

EXPECTED_ROWS = [
    (2, 4, 9, 13, 9, False),
    (2, 5, 12, 22, 14, False),
    (2, 6, 16, 37, 21, False),
    (2, 7, 21, 50, 29, False),
    (2, 8, 25, 65, 45, False),
    (2, 9, 30, 82, 70, False),
    (2, 10, 36, 101, 95, True),
    (3, 5, 18, 32, 18, False),
    (3, 6, 27, 54, 27, False),
    (3, 7, 36, 93, 43, False),
    (3, 8, 48, 157, 66, False),
    (3, 9, 64, 258, 100, False),
    (3, 10, 80, 432, 151, False),
    (3, 11, 100, 744, 228, False),
    (3, 12, 125, 1025, 332, False),
    (3, 13, 150, 1314, 504, False),
    (3, 14, 180, 1653, 756, True),
    (3, 15, 216, 2046, 1097, True),
    (3, 16, 252, 2497, 1673, True),
    (3, 17, 294, 3010, 2365, True),
    (4, 6, 37, 54, 37, False),
    (4, 7, 54, 93, 58, False),
    (4, 8, 81, 157, 91, False),
    (4, 9, 108, 258, 141, False),
    (4, 10, 144, 432, 217, False),
    (4, 11, 192, 744, 332, False),
    (4, 12, 256, 1306, 504, False),
    (4, 13, 320, 2117, 762, False),
    (4, 14, 400, 3519, 1150, False),
    (4, 15, 500, 6037, 1733, False),
    (4, 16, 625, 10709, 2539, False),
    (4, 17, 750, 17594, 3844, False),
    (4, 18, 900, 28069, 5804, False),
    (4, 19, 1080, 35246, 8459, True),
    (4, 20, 1296, 43721, 12834, True),
    (5, 7, 74, 128, 74, False),
    (5, 8, 114, 221, 117, False),
    (5, 9, 162, 384, 183, False),
    (5, 10, 243, 642, 283, False),
    (5, 11, 324, 1074, 435, False),
    (5, 12, 432, 1818, 664, False),
    (5, 13, 576, 3141, 1008, False),
    (5, 14, 768, 5521, 1524, False),
    (5, 15, 1024, 9040, 2301, False),
    (5, 16, 1280, 15077, 3467, False),
    (5, 17, 1600, 25786, 5216, False),
    (5, 18, 2000, 45384, 7842, False),
    (5, 19, 2500, 76564, 11781, False),
    (5, 20, 3125, 125996, 17690, False),
    (6, 8, 150, 221, 150, False),
    (6, 9, 216, 384, 240, False),
    (6, 10, 324, 642, 381, False),
    (6, 11, 486, 1074, 598, False),
    (6, 12, 729, 1818, 929, False),
    (6, 13, 972, 3141, 1433, False),
    (6, 14, 1296, 5521, 2195, False),
    (6, 15, 1728, 9040, 3346, False),
    (6, 16, 2304, 15077, 5079, False),
    (6, 17, 3072, 25786, 7688, False),
    (6, 18, 4096, 45384, 11609, False),
    (6, 19, 5120, 76564, 17499, False),
    (6, 20, 6400, 125996, 26345, False),
    (7, 9, 288, 512, 302, False),
    (7, 10, 432, 894, 481, False),
    (7, 11, 648, 1536, 762, False),
    (7, 12, 972, 2610, 1196, False),
    (7, 13, 1458, 4428, 1859, False),
    (7, 14, 2187, 7569, 2866, False),
    (7, 15, 2916, 13136, 4391, False),
    (7, 16, 3888, 23085, 6692, False),
    (7, 17, 5184, 38162, 10159, False),
    (7, 18, 6912, 63948, 15376, False),
    (7, 19, 9216, 109332, 23218, False),
    (7, 20, 12288, 191532, 34999, False),
    (8, 10, 576, 898, 608, False),
    (8, 11, 864, 1536, 978, False),
    (8, 12, 1296, 2610, 1569, False),
    (8, 13, 1944, 4428, 2494, False),
    (8, 14, 2916, 7569, 3924, False),
    (8, 15, 4374, 13136, 6118, False),
    (8, 16, 6561, 23085, 9463, False),
    (8, 17, 8748, 38162, 14543, False),
    (8, 18, 11664, 63948, 22230, False),
    (8, 19, 15552, 109332, 33839, False),
    (8, 20, 20736, 191532, 51339, False),
    (9, 11, 1152, 2048, 1217, False),
    (9, 12, 1728, 3534, 1957, False),
    (9, 13, 2592, 6144, 3139, False),
    (9, 14, 3888, 10572, 4989, False),
    (9, 15, 5832, 18141, 7849, False),
    (9, 16, 8748, 31277, 12237, False),
    (9, 17, 13122, 54546, 18927, False),
    (9, 18, 19683, 95772, 29086, False),
    (9, 19, 26244, 159720, 44461, False),
    (9, 20, 34992, 269052, 67679, False),
    (10, 12, 2304, 3634, 2444, False),
    (10, 13, 3456, 6144, 3964, False),
    (10, 14, 5184, 10572, 6424, False),
    (10, 15, 7776, 18141, 10326, False),
    (10, 16, 11664, 31277, 16430, False),
    (10, 17, 17496, 54546, 25884, False),
    (10, 18, 26244, 95772, 40421, False),
    (10, 19, 39366, 159720, 62648, False),
    (10, 20, 59049, 269052, 96485, False),
    (11, 13, 4608, 8192, 4889, False),
    (11, 14, 6912, 14004, 7929, False),
    (11, 15, 10368, 24576, 12849, False),
    (11, 16, 15552, 42717, 20653, False),
    (11, 17, 23328, 73994, 32861, False),
    (11, 18, 34992, 128540, 51769, False),
    (11, 19, 52488, 225256, 80843, False),
    (11, 20, 78732, 395022, 125296, False),
    (12, 14, 9216, 14668, 9811, False),
    (12, 15, 13824, 24576, 16018, False),
    (12, 16, 20736, 42717, 26191, False),
    (12, 17, 31104, 73994, 42514, False),
    (12, 18, 46656, 128540, 68325, False),
    (12, 19, 69984, 225256, 108697, False),
    (12, 20, 104976, 395022, 171313, False),
    (13, 15, 18432, 32768, 19622, False),
    (13, 16, 27648, 55587, 32037, False),
    (13, 17, 41472, 98304, 52382, False),
    (13, 18, 62208, 172298, 85028, False),
    (13, 19, 93312, 300838, 136651, False),
    (13, 20, 139968, 526094, 217395, False),
    (14, 16, 36864, 59101, 39351, False),
    (14, 17, 55296, 98304, 64611, False),
    (14, 18, 82944, 172298, 106445, False),
    (14, 19, 124416, 300838, 174283, False),
    (14, 20, 186624, 526094, 282639, False),
    (15, 17, 73728, 131072, 78702, False),
    (15, 18, 110592, 220918, 129223, False),
    (15, 19, 165888, 393216, 212891, False),
    (15, 20, 248832, 694054, 348567, False),
    (16, 18, 147456, 237834, 157762, False),
    (16, 19, 221184, 393216, 260270, False),
    (16, 20, 331776, 694054, 431610, False),
    (17, 19, 294912, 524288, 315525, False),
    (17, 20, 442368, 878810, 520540, False),
    (18, 20, 589824, 956198, 632265, False),
]
