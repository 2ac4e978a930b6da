"""Frozen reference tables for the master-polynomial components.

TABLE_SCHUR[(r, n)]       : Schur coefficients of P_{r,n}      (n = 3, 4, 5)
TABLE_ELEMENTARY[(r, n)]  : elementary coefficients of P_{r,n} (n = 3, 4, 5)
TABLE_E6[r]               : elementary coefficients of P_{r,6} (r = 0..10)
TABLE_COUNTS[(n, r)]      : (appearing, allowed) support counts

Elementary keys are the full index partitions (the separated powers of
e_1 folded back in); values are strings in ``p/q`` form.

At (r, n) = (3, 5), (4, 5) and (5, 5) the two published basis expansions
contradict each other; the cells frozen here are the ones confirmed by
both independent computation routes and by converting the consistent
expansion across bases (the other cell is a typo: two Schur lines were
dropped from the r = 3 component, three r = 4 elementary denominators
read 180 for 80, and the r = 5 Schur line misprints one index partition
and one numerator).
"""

TABLE_SCHUR = {
    (0, 3): {(): "1"},
    (1, 3): {(1, 1, 1): "1/2"},
    (0, 4): {(1,): "1"},
    (1, 4): {(2, 1, 1): "1/2", (1, 1, 1, 1): "-1"},
    (2, 4): {(2, 2, 2, 1): "-1/6", (3, 2, 1, 1): "1/12"},
    (3, 4): {(3, 3, 2, 2): "1/24"},
    (0, 5): {(2,): "1", (1, 1): "1"},
    (1, 5): {
        (3, 1, 1): "1/2",
        (2, 2, 1): "1/2",
        (2, 1, 1, 1): "-1/2",
        (1, 1, 1, 1, 1): "17/10",
    },
    (2, 5): {
        (4, 2, 1, 1): "1/12",
        (4, 1, 1, 1, 1): "1/10",
        (3, 3, 1, 1): "1/12",
        (3, 2, 1, 1, 1): "-11/60",
        (3, 2, 2, 1): "-1/12",
        (2, 2, 2, 2): "-1/6",
        (2, 2, 2, 1, 1): "2/3",
    },
    (3, 5): {
        (5, 3, 1, 1, 1): "1/120",
        (5, 2, 2, 1, 1): "1/120",
        (4, 4, 1, 1, 1): "1/120",
        (4, 3, 2, 2): "1/24",
        (4, 3, 2, 1, 1): "-1/40",
        (4, 2, 2, 2, 1): "1/60",
        (3, 3, 3, 2): "1/24",
        (3, 3, 3, 1, 1): "1/30",
        (3, 3, 2, 2, 1): "-11/120",
        (3, 2, 2, 2, 2): "1/40",
    },
    (4, 5): {
        (5, 4, 2, 2, 1): "1/240",
        (5, 3, 3, 2, 1): "1/240",
        (5, 3, 2, 2, 2): "-1/240",
        (4, 4, 3, 2, 1): "-1/240",
        (4, 3, 3, 2, 2): "-11/720",
        (4, 3, 3, 3, 1): "-1/240",
        (3, 3, 3, 3, 2): "1/60",
    },
    (5, 5): {
        (5, 5, 3, 2, 2): "1/1440",
        (5, 4, 3, 3, 2): "-1/1440",
        (5, 4, 4, 2, 2): "1/1440",
        (5, 3, 3, 3, 3): "-1/720",
        (4, 4, 3, 3, 3): "-1/360",
        (4, 4, 4, 3, 2): "-1/1440",
    },
    (6, 5): {
        (5, 5, 4, 3, 3): "1/2880",
        (5, 4, 4, 4, 3): "1/2880",
        (4, 4, 4, 4, 4): "-1/960",
    },
}

TABLE_ELEMENTARY = {
    (0, 3): {(): "1"},
    (1, 3): {(3,): "1/2"},
    (0, 4): {(1,): "1"},
    (1, 4): {(4,): "-3/2", (3, 1): "1/2"},
    (2, 4): {(4, 3): "-1/4", (4, 2, 1): "1/12"},
    (3, 4): {(4, 4, 2): "1/24"},
    (0, 5): {(1, 1): "1"},
    (1, 5): {(5,): "27/10", (4, 1): "-3/2", (3, 1, 1): "1/2"},
    (2, 5): {
        (5, 3): "6/5",
        (5, 2, 1): "-3/10",
        (5, 1, 1, 1): "1/60",
        (4, 3, 1): "-1/4",
        (4, 2, 1, 1): "1/12",
    },
    (3, 5): {
        (5, 5, 1): "19/120",
        (5, 4, 2): "-7/40",
        (5, 4, 1, 1): "1/120",
        (5, 3, 3): "3/40",
        (5, 3, 2, 1): "-1/10",
        (5, 2, 2, 1, 1): "1/120",
        (4, 4, 2, 1): "1/24",
    },
    (4, 5): {
        (5, 5, 4): "1/36",
        (5, 5, 3, 1): "1/720",
        (5, 5, 2, 2): "1/80",
        (5, 5, 2, 1, 1): "-1/80",
        (5, 4, 3, 2): "-1/80",
        (5, 4, 2, 2, 1): "1/240",
    },
    (5, 5): {
        (5, 5, 5, 2): "-1/1440",
        (5, 5, 4, 2, 1): "-1/480",
        (5, 5, 3, 2, 2): "1/1440",
    },
    (6, 5): {
        (5, 5, 5, 5): "-1/720",
        (5, 5, 5, 3, 2): "1/2880",
    },
}

TABLE_E6 = {
    0: {(1, 1, 1): "1"},
    1: {
        (3, 1, 1, 1): "1/2",
        (4, 1, 1): "-3/2",
        (5, 1): "27/10",
        (6,): "-162/35",
    },
    2: {
        (4, 2, 1, 1, 1): "1/12",
        (5, 1, 1, 1, 1): "1/60",
        (6, 1, 1, 1): "-9/140",
        (4, 3, 1, 1): "-1/4",
        (5, 2, 1, 1): "-3/10",
        (5, 3, 1): "6/5",
        (6, 2, 1): "93/140",
        (6, 3): "-513/140",
    },
    3: {
        (5, 2, 2, 1, 1, 1): "1/120",
        (6, 2, 1, 1, 1, 1): "1/280",
        (6, 3, 1, 1, 1): "-3/140",
        (6, 4, 1, 1): "-229/840",
        (6, 5, 1): "-19/40",
        (6, 2, 2, 1, 1): "-1/35",
        (6, 3, 2, 1): "141/280",
        (6, 6): "17/70",
        (5, 3, 3, 1): "3/40",
        (6, 3, 3): "-18/35",
        (5, 3, 2, 1, 1): "-1/10",
        (6, 4, 2): "3/5",
        (4, 4, 2, 1, 1): "1/24",
        (5, 4, 1, 1, 1): "1/120",
        (5, 5, 1, 1): "19/120",
        (5, 4, 2, 1): "-7/40",
    },
    4: {
        (6, 3, 2, 2, 1, 1): "-3/280",
        (6, 3, 3, 2, 1): "9/280",
        (6, 6, 3): "33/280",
        (6, 4, 3, 2): "51/560",
        (6, 3, 3, 3): "-9/560",
        (6, 4, 2, 2, 1): "-5/112",
        (6, 5, 2, 2): "-3/56",
        (6, 2, 2, 2, 1, 1, 1): "1/1680",
        (6, 4, 2, 1, 1, 1): "11/560",
        (6, 5, 2, 1, 1): "29/504",
        (6, 5, 1, 1, 1, 1): "-1/560",
        (6, 4, 4, 1): "-5/126",
        (6, 4, 3, 1, 1): "-1/180",
        (6, 6, 2, 1): "11/400",
        (6, 6, 1, 1, 1): "-179/5040",
        (5, 4, 2, 2, 1, 1): "1/240",
        (5, 5, 2, 1, 1, 1): "-1/80",
        (5, 5, 3, 1, 1): "1/720",
        (5, 5, 4, 1): "1/36",
        (5, 5, 2, 2, 1): "1/80",
        (5, 4, 3, 2, 1): "-1/80",
        (6, 5, 3, 1): "-43/840",
        (6, 5, 4): "-5/42",
    },
    5: {
        (6, 4, 2, 2, 2, 1, 1): "1/3360",
        (6, 5, 2, 2, 1, 1, 1): "-1/1120",
        (6, 6, 2, 2, 1, 1): "-31/7200",
        (6, 6, 2, 1, 1, 1, 1): "9/5600",
        (6, 5, 3, 2, 1, 1): "13/3360",
        (6, 6, 4, 1, 1): "-281/16800",
        (6, 6, 3, 1, 1, 1): "1/800",
        (6, 6, 5, 1): "121/16800",
        (6, 5, 3, 3, 1): "-1/3360",
        (6, 6, 4, 2): "11/2100",
        (6, 6, 6): "1/4200",
        (6, 5, 4, 3): "-1/168",
        (6, 5, 2, 2, 2, 1): "1/1260",
        (6, 6, 2, 2, 2): "11/4200",
        (6, 5, 3, 2, 2): "-1/160",
        (6, 4, 3, 2, 2, 1): "-1/360",
        (6, 4, 3, 3, 2): "3/1120",
        (6, 5, 4, 2, 1): "67/5040",
        (6, 5, 5, 2): "1/280",
        (6, 6, 3, 3): "1/210",
        (6, 4, 4, 2, 1, 1): "1/336",
        (6, 5, 4, 1, 1, 1): "-1/3360",
        (5, 5, 3, 2, 2, 1): "1/1440",
        (5, 5, 4, 2, 1, 1): "-1/480",
        (5, 5, 5, 2, 1): "-1/1440",
        (6, 6, 3, 2, 1): "-127/16800",
        (6, 5, 5, 1, 1): "-1/10080",
    },
    6: {
        (6, 6, 2, 2, 2, 2, 1): "1/100800",
        (6, 6, 3, 2, 2, 1, 1): "-1/5600",
        (6, 6, 4, 2, 2, 1): "-11/16800",
        (6, 6, 4, 2, 1, 1, 1): "1/1400",
        (6, 6, 3, 3, 2, 1): "1/6720",
        (6, 6, 4, 4, 1): "-1/420",
        (6, 6, 4, 3, 1, 1): "1/6720",
        (6, 6, 6, 2, 1): "-97/100800",
        (6, 6, 6, 3): "59/8400",
        (6, 6, 5, 2, 2): "11/25200",
        (6, 6, 5, 4): "-49/3600",
        (6, 6, 3, 2, 2, 2): "1/4032",
        (6, 5, 3, 2, 2, 2, 1): "1/20160",
        (6, 5, 4, 2, 2, 1, 1): "-1/6720",
        (6, 5, 5, 5): "1/120",
        (6, 5, 4, 3, 2, 1): "-1/3360",
        (6, 5, 3, 3, 2, 2): "-1/6720",
        (6, 6, 5, 3, 1): "-47/25200",
        (6, 6, 4, 3, 2): "83/33600",
        (6, 6, 5, 2, 1, 1): "1/25200",
        (6, 5, 5, 3, 1, 1): "1/20160",
        (5, 5, 5, 3, 2, 1): "1/2880",
        (6, 6, 6, 1, 1, 1): "-1/2880",
        (6, 5, 5, 2, 2, 1): "-1/10080",
        (6, 5, 5, 3, 2): "-13/6720",
        (6, 5, 5, 4, 1): "1/252",
        (5, 5, 5, 5, 1): "-1/720",
    },
    7: {
        (6, 6, 3, 3, 2, 2, 2): "1/201600",
        (6, 6, 6, 3, 2, 1): "-17/201600",
        (6, 6, 6, 4, 2): "13/25200",
        (6, 6, 6, 6): "29/16800",
        (6, 6, 6, 4, 1, 1): "-11/28800",
        (6, 6, 6, 3, 3): "1/3360",
        (6, 6, 5, 4, 3): "-11/25200",
        (6, 6, 4, 4, 2, 1, 1): "1/22400",
        (6, 6, 4, 3, 2, 2, 1): "-1/16800",
        (6, 6, 4, 3, 3, 2): "1/11200",
        (6, 6, 5, 3, 2, 1, 1): "-1/9600",
        (6, 6, 5, 4, 2, 1): "3/22400",
        (6, 6, 5, 5, 1, 1): "3/5600",
        (6, 6, 5, 2, 2, 2, 1): "1/201600",
        (6, 6, 6, 2, 2, 1, 1): "19/201600",
        (6, 6, 5, 5, 2): "-1/1400",
        (6, 5, 5, 3, 2, 2, 1): "1/40320",
        (6, 5, 5, 3, 3, 2): "-1/13440",
        (6, 5, 5, 5, 3): "1/3360",
        (6, 6, 5, 3, 2, 2): "1/6300",
        (6, 6, 5, 3, 3, 1): "-1/25200",
        (6, 6, 6, 2, 2, 2): "-1/16800",
        (6, 5, 5, 5, 2, 1): "-1/10080",
        (6, 6, 6, 5, 1): "-11/9600",
    },
    8: {
        (6, 6, 5, 3, 3, 2, 2): "1/403200",
        (6, 6, 6, 3, 2, 2, 2): "-1/134400",
        (6, 6, 6, 4, 2, 2, 1): "1/1209600",
        (6, 6, 5, 5, 3, 2): "1/403200",
        (6, 6, 5, 5, 5): "-1/20160",
        (6, 6, 5, 5, 4, 1): "1/33600",
        (6, 6, 6, 3, 3, 2, 1): "1/134400",
        (6, 6, 5, 4, 3, 2, 1): "-1/134400",
        (6, 6, 6, 6, 3): "13/67200",
        (6, 6, 6, 3, 3, 3): "1/403200",
        (6, 6, 6, 5, 4): "1/75600",
        (6, 6, 6, 5, 3, 1): "-31/604800",
        (6, 6, 6, 4, 3, 2): "1/172800",
        (6, 6, 6, 5, 2, 1, 1): "1/60480",
        (6, 6, 6, 6, 2, 1): "-131/1209600",
        (6, 6, 6, 5, 2, 2): "1/28800",
        (6, 6, 6, 4, 4, 1): "-1/50400",
    },
    9: {
        (6, 6, 6, 4, 3, 3, 2): "1/2419200",
        (6, 6, 6, 5, 3, 2, 2): "-1/806400",
        (6, 6, 6, 6, 3, 2, 1): "-1/2419200",
        (6, 6, 6, 6, 4, 2): "-1/302400",
        (6, 6, 6, 5, 5, 2): "1/201600",
        (6, 6, 6, 6, 6): "1/33600",
        (6, 6, 6, 6, 3, 3): "1/201600",
        (6, 6, 6, 6, 5, 1): "-13/604800",
        (6, 6, 6, 5, 4, 3): "-1/604800",
    },
    10: {
        (6, 6, 6, 6, 4, 3, 2): "1/4838400",
        (6, 6, 6, 6, 6, 2, 1): "-1/1209600",
        (6, 6, 6, 6, 6, 3): "1/1612800",
        (6, 6, 6, 6, 5, 4): "-1/1209600",
    },
}

TABLE_COUNTS = {
    (3, 0): (1, 1),
    (3, 1): (1, 2),
    (4, 0): (1, 1),
    (4, 1): (2, 3),
    (4, 2): (2, 5),
    (4, 3): (1, 8),
    (5, 0): (1, 1),
    (5, 1): (3, 4),
    (5, 2): (5, 8),
    (5, 3): (7, 13),
    (5, 4): (6, 20),
    (5, 5): (3, 28),
    (5, 6): (2, 38),
    (6, 0): (1, 1),
    (6, 1): (4, 5),
    (6, 2): (8, 11),
    (6, 3): (16, 20),
    (6, 4): (23, 31),
    (6, 5): (27, 46),
    (6, 6): (27, 64),
    (6, 7): (24, 87),
    (6, 8): (17, 114),
    (6, 9): (9, 148),
    (6, 10): (4, 187),
}
