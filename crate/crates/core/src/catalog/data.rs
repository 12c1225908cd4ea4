//! Static catalog data. Bracket coefficients and images are expression
//! strings in the entry's parameters.

pub(super) type Bracket = (usize, usize, &'static [(usize, &'static str)]);
pub(super) type McTerms = (usize, &'static [(usize, usize, &'static str)]);

pub(super) enum Constants {
    Brackets(&'static [Bracket]),
    /// Structure equations `d alpha^k = sum c alpha^i ^ alpha^j`, 0-based.
    Mc(&'static [McTerms]),
}

pub(super) struct EntryData {
    pub name: &'static str,
    pub dim: usize,
    pub params: &'static [&'static str],
    pub constraints: &'static [&'static str],
    pub constants: Constants,
    pub completely_solvable: bool,
    /// Basis label prefix and first index: `("e", 0)` gives `e0, e1, ...`.
    pub basis: (&'static str, usize),
    pub samples: &'static [&'static str],
    pub group: &'static str,
}

pub(super) struct RowData {
    pub label: &'static str,
    pub entry: &'static str,
    pub in_table: bool,
    /// Extra restrictions on top of the entry's constraints.
    pub constraints: &'static [&'static str],
    pub samples: &'static [&'static str],
    pub betti: Option<(usize, usize)>,
    pub has_symplectic: bool,
    pub has_complex: bool,
    pub cite: &'static str,
    /// `(type, action)`; actions are comma separated `J(u)=v` images.
    pub cells: &'static [(usize, &'static str)],
    /// Basis the quoted actions are written in: the row's `e_i` is the
    /// entry's `e_{table_basis[i]}`. Empty means the entry's own basis.
    pub table_basis: &'static [usize],
    /// `(type, action)` replacing a quoted action that admits no structure.
    pub corrections: &'static [(usize, &'static str)],
}

const NO_GCS: &str = "families without generalized complex structures";
const SC: &str = "algebras with symplectic or complex structures";

pub(super) const ENTRIES: &[EntryData] = &[
    EntryData {
        name: "R x r3",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(1, 2, &[(2, "1")]), (1, 3, &[(2, "1"), (3, "1")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: NO_GCS,
    },
    EntryData {
        name: "R x r3,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["-1 < lambda < 1", "lambda != 0"],
        constants: Constants::Brackets(&[(1, 2, &[(2, "1")]), (1, 3, &[(3, "lambda")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=1/2", "lambda=-1/3"],
        group: NO_GCS,
    },
    EntryData {
        name: "r4",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(1, "1"), (2, "1")]),
            (0, 3, &[(2, "1"), (3, "1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: NO_GCS,
    },
    EntryData {
        name: "r4,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda != -1", "lambda != 0", "lambda != 1"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "lambda")]),
            (0, 3, &[(2, "1"), (3, "lambda")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=1/3", "lambda=2", "lambda=-3"],
        group: NO_GCS,
    },
    EntryData {
        name: "r4,mu,lambda",
        dim: 4,
        params: &["mu", "lambda"],
        constraints: &["-1 < mu < lambda < 1", "mu*lambda != 0", "mu + lambda != 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "mu")]),
            (0, 3, &[(3, "lambda")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["mu=-1/2, lambda=1/3", "mu=1/4, lambda=1/2", "mu=-3/4, lambda=1/5", "mu=-1/5, lambda=2/3"],
        group: NO_GCS,
    },
    EntryData {
        name: "aff(R) x aff(R)",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(0, 1, &[(1, "1")]), (2, 3, &[(3, "1")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "aff(C)",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[
            (0, 2, &[(2, "1")]),
            (0, 3, &[(3, "1")]),
            (1, 2, &[(3, "1")]),
            (1, 3, &[(2, "-1")]),
        ]),
        completely_solvable: false,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "R x e(2)",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(1, 2, &[(3, "-1")]), (1, 3, &[(2, "1")])]),
        completely_solvable: false,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "R x h3",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(1, 2, &[(3, "1")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "R x r3,lambda[-1,0,1]",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda in {-1, 0, 1}"],
        constants: Constants::Brackets(&[(1, 2, &[(2, "1")]), (1, 3, &[(3, "lambda")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=-1", "lambda=0", "lambda=1"],
        group: SC,
    },
    EntryData {
        name: "r4,lambda[-1,0,1]",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda in {-1, 0, 1}"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "lambda")]),
            (0, 3, &[(2, "1"), (3, "lambda")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=-1", "lambda=0", "lambda=1"],
        group: SC,
    },
    EntryData {
        name: "r4,mu,1",
        dim: 4,
        params: &["mu"],
        constraints: &["-1 < mu <= 1", "mu != 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "mu")]),
            (0, 3, &[(3, "1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["mu=1/2", "mu=-1/2"],
        group: SC,
    },
    EntryData {
        name: "r4,mu,mu",
        dim: 4,
        params: &["mu"],
        constraints: &["-1 < mu < 1", "mu != 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "mu")]),
            (0, 3, &[(3, "mu")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["mu=1/3", "mu=-2/3"],
        group: SC,
    },
    EntryData {
        name: "r4,mu,-mu",
        dim: 4,
        params: &["mu"],
        constraints: &["-1 < mu < 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "mu")]),
            (0, 3, &[(3, "-mu")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["mu=-1/2", "mu=-1/3"],
        group: SC,
    },
    EntryData {
        name: "r4,-1,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["-1 < lambda < 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "-1")]),
            (0, 3, &[(3, "lambda")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=-1/2", "lambda=-1/3"],
        group: SC,
    },
    EntryData {
        name: "r4,-1,-1",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "-1")]),
            (0, 3, &[(3, "-1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "R x r'3,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda > 0"],
        constants: Constants::Brackets(&[
            (1, 2, &[(2, "lambda"), (3, "-1")]),
            (1, 3, &[(2, "1"), (3, "lambda")]),
        ]),
        completely_solvable: false,
        basis: ("e", 0),
        samples: &["lambda=1", "lambda=1/2"],
        group: SC,
    },
    EntryData {
        name: "n4",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(0, 1, &[(2, "1")]), (0, 2, &[(3, "1")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "r'4,mu,lambda",
        dim: 4,
        params: &["mu", "lambda"],
        constraints: &["mu > 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "mu")]),
            (0, 2, &[(2, "lambda"), (3, "-1")]),
            (0, 3, &[(2, "1"), (3, "lambda")]),
        ]),
        completely_solvable: false,
        basis: ("e", 0),
        samples: &["mu=1, lambda=0", "mu=1/2, lambda=1", "mu=2, lambda=-1/2"],
        group: SC,
    },
    EntryData {
        name: "d4",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(2, "-1")]),
            (1, 2, &[(3, "1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "d4,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda >= 1/2"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "lambda")]),
            (0, 2, &[(2, "1 - lambda")]),
            (0, 3, &[(3, "1")]),
            (1, 2, &[(3, "1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &["lambda=3/4", "lambda=3", "lambda=1/2"],
        group: SC,
    },
    EntryData {
        name: "d'4,lambda",
        dim: 4,
        params: &["lambda"],
        constraints: &["lambda >= 0"],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "lambda"), (2, "-1")]),
            (0, 2, &[(1, "1"), (2, "lambda")]),
            (0, 3, &[(3, "2*lambda")]),
            (1, 2, &[(3, "1")]),
        ]),
        completely_solvable: false,
        basis: ("e", 0),
        samples: &["lambda=0", "lambda=1", "lambda=1/2"],
        group: SC,
    },
    EntryData {
        name: "h4",
        dim: 4,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[
            (0, 1, &[(1, "1")]),
            (0, 2, &[(1, "1"), (2, "1")]),
            (0, 3, &[(3, "2")]),
            (1, 2, &[(3, "1")]),
        ]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: SC,
    },
    EntryData {
        name: "aff(R)",
        dim: 2,
        params: &[],
        constraints: &[],
        constants: Constants::Brackets(&[(0, 1, &[(1, "1")])]),
        completely_solvable: true,
        basis: ("e", 0),
        samples: &[""],
        group: "two-dimensional example",
    },
    EntryData {
        name: "g6",
        dim: 6,
        params: &["mu"],
        constraints: &["mu != 0"],
        // d a5 = a12 + mu a15, d a6 = a15 + a34
        constants: Constants::Mc(&[
            (4, &[(0, 1, "1"), (0, 4, "mu")]),
            (5, &[(0, 4, "1"), (2, 3, "1")]),
        ]),
        completely_solvable: false,
        basis: ("X", 1),
        samples: &["mu=1", "mu=-2"],
        group: "six-dimensional example",
    },
];

const C51: &str = "MR, O, SJ";
const C52: &str = "MR, O1, O, SJ";
const NONE: &str = "";

pub(super) const ROWS: &[RowData] = &[
    RowData {
        label: "R x r3",
        entry: "R x r3",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((3, 5)),
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "R x r3,lambda",
        entry: "R x r3,lambda",
        in_table: true,
        constraints: &[],
        samples: &["lambda=1/2", "lambda=-1/3"],
        betti: Some((3, 5)),
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4",
        entry: "r4",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((1, 2)),
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,lambda",
        entry: "r4,lambda",
        in_table: true,
        constraints: &[],
        samples: &["lambda=1/3", "lambda=2", "lambda=-3"],
        betti: Some((1, 2)),
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,mu,lambda",
        entry: "r4,mu,lambda",
        in_table: true,
        constraints: &[],
        samples: &["mu=-1/2, lambda=1/3", "mu=1/4, lambda=1/2", "mu=-3/4, lambda=1/5", "mu=-1/5, lambda=2/3"],
        betti: Some((1, 2)),
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "aff(R) x aff(R)",
        entry: "aff(R) x aff(R)",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((3, 5)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha1, J(e2)=alpha3"),
            (1, "J(e0)=alpha1, J(e2)=e3"),
            (2, "J(e0)=e1, J(e2)=e3"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "aff(C)",
        entry: "aff(C)",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((2, 2)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha3, J(e1)=alpha2"),
            (1, "J(e0)=alpha1, J(e2)=e3"),
            (2, "J(e0)=e3, J(e1)=-e2"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "R x h3",
        entry: "R x h3",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((5, 31)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha2, J(e1)=alpha3"),
            (1, "J(e0)=e1, J(e2)=alpha3"),
            (2, "J(e0)=e1, J(e2)=e3"),
        ],
        table_basis: &[1, 2, 3, 0],
        corrections: &[],
    },
    RowData {
        label: "R x r3,-1",
        entry: "R x r3,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = -1"],
        samples: &["lambda=-1"],
        betti: Some((3, 13)),
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha2, J(e1)=-alpha3"), (1, "J(e0)=e1, J(e2)=alpha3")],
        table_basis: &[],
        corrections: &[(0, "J(e0)=alpha1, J(e2)=-alpha3")],
    },
    RowData {
        label: "R x r3,0",
        entry: "R x r3,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = 0"],
        samples: &["lambda=0"],
        betti: Some((5, 11)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha2, J(e1)=-alpha3"),
            (1, "J(e0)=alpha3, J(e1)=e2"),
            (2, "J(e0)=e3, J(e1)=e2"),
        ],
        table_basis: &[],
        corrections: &[(0, "J(e0)=alpha3, J(e1)=-alpha2")],
    },
    RowData {
        label: "R x r3,1",
        entry: "R x r3,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = 1"],
        samples: &["lambda=1"],
        betti: Some((3, 13)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha1, J(e2)=e3"), (2, "J(e0)=e1, J(e2)=e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,-1",
        entry: "r4,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = -1"],
        samples: &["lambda=-1"],
        betti: Some((1, 4)),
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha2, J(e1)=alpha3"), (1, "J(e0)=e3, J(e1)=alpha2")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,0",
        entry: "r4,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = 0"],
        samples: &["lambda=0"],
        betti: Some((3, 7)),
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha1, J(e2)=alpha3"), (1, "J(e0)=e1, J(e2)=alpha3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,1",
        entry: "r4,lambda[-1,0,1]",
        in_table: true,
        constraints: &["lambda = 1"],
        samples: &["lambda=1"],
        betti: Some((1, 4)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha2, J(e1)=e3"), (2, "J(e0)=e3, J(e1)=e2")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,mu,1",
        entry: "r4,mu,1",
        in_table: true,
        constraints: &[],
        samples: &["mu=1/2", "mu=-1/2"],
        betti: Some((1, 4)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha2, J(e1)=e3"), (2, "J(e0)=e2, J(e1)=e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,mu,mu",
        entry: "r4,mu,mu",
        in_table: true,
        constraints: &[],
        samples: &["mu=1/3", "mu=-2/3"],
        betti: Some((1, 4)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha1, J(e2)=e3"), (2, "J(e0)=e1, J(e2)=e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,-1,lambda",
        entry: "r4,-1,lambda",
        in_table: true,
        constraints: &[],
        samples: &["lambda=-1/2", "lambda=-1/3"],
        betti: Some((1, 4)),
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha3, J(e1)=alpha2"), (1, "J(e0)=e3, J(e1)=alpha2")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r4,-1,-1",
        entry: "r4,-1,-1",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((1, 4)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha3, J(e1)=alpha2"),
            (1, "J(e0)=alpha1, J(e2)=e3"),
            (2, "J(e0)=e1, J(e2)=e3"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "R x r'3,0",
        entry: "R x e(2)",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((5, 11)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha3, J(e1)=alpha2"),
            (1, "J(e0)=alpha3, J(e1)=e2"),
            (2, "J(e0)=e3, J(e1)=e2"),
        ],
        table_basis: &[1, 2, 3, 0],
        corrections: &[],
    },
    RowData {
        label: "R x r'3,lambda",
        entry: "R x r'3,lambda",
        in_table: true,
        constraints: &[],
        samples: &["lambda=1", "lambda=1/2"],
        betti: Some((3, 5)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha3, J(e1)=e2"), (2, "J(e0)=e3, J(e1)=e2")],
        table_basis: &[1, 2, 3, 0],
        corrections: &[],
    },
    RowData {
        label: "n4",
        entry: "n4",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((3, 14)),
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha3, J(e1)=alpha2"), (1, "J(e0)=e1, J(e2)=alpha3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r'4,mu,0",
        entry: "r'4,mu,lambda",
        in_table: true,
        constraints: &["lambda = 0"],
        samples: &["mu=1, lambda=0", "mu=1/2, lambda=0"],
        betti: Some((1, 4)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha1, J(e2)=alpha3"),
            (1, "J(e0)=e1, J(e2)=alpha3"),
            (2, "J(e0)=e1, J(e2)=e3"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "r'4,mu,lambda",
        entry: "r'4,mu,lambda",
        in_table: true,
        constraints: &["lambda != 0"],
        samples: &["mu=1, lambda=1", "mu=1/2, lambda=-2", "mu=2, lambda=-1/2", "mu=1/3, lambda=3/2"],
        betti: Some((1, 2)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha1, J(e2)=e3"), (2, "J(e0)=e1, J(e2)=e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "h4",
        entry: "h4",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((1, 1)),
        has_symplectic: true,
        has_complex: true,
        cite: NONE,
        cells: &[(0, "J(e0)=2*alpha3, J(e1)=alpha2"), (2, "J(e0)=e2, J(e1)=e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d4",
        entry: "d4",
        in_table: true,
        constraints: &[],
        samples: &[""],
        betti: Some((2, 4)),
        has_symplectic: false,
        has_complex: true,
        cite: NONE,
        cells: &[(2, "J(e0)=e1, J(e3)=e2")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d4,lambda",
        entry: "d4,lambda",
        in_table: true,
        constraints: &["lambda > 1/2", "lambda != 1", "lambda != 2"],
        samples: &["lambda=3/4", "lambda=3"],
        betti: Some((1, 1)),
        has_symplectic: true,
        has_complex: true,
        cite: NONE,
        cells: &[(0, "J(e0)=alpha3, J(e1)=alpha2"), (2, "J(e0)=lambda*e1, J(e2)=-e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d4,1",
        entry: "d4,lambda",
        in_table: true,
        constraints: &["lambda = 1"],
        samples: &["lambda=1"],
        betti: Some((2, 4)),
        has_symplectic: true,
        has_complex: true,
        cite: NONE,
        cells: &[(0, "J(e0)=alpha3, J(e1)=alpha2"), (2, "J(e0)=e1, J(e2)=-e3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d4,1/2",
        entry: "d4,lambda",
        in_table: true,
        constraints: &["lambda = 1/2"],
        samples: &["lambda=1/2"],
        betti: Some((1, 3)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha3, J(e1)=alpha2"),
            (1, "J(e0)=alpha3, J(e1)=e2"),
            (2, "J(e0)=1/2*e2, J(e1)=e3"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d4,2",
        entry: "d4,lambda",
        in_table: true,
        constraints: &["lambda = 2"],
        samples: &["lambda=2"],
        betti: Some((1, 3)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=alpha3, J(e1)=alpha2"),
            (1, "J(e0)=e1, J(e2)=alpha3"),
            (2, "J(e0)=e1, J(e2)=-1/2*e3"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d'4,0",
        entry: "d'4,lambda",
        in_table: true,
        constraints: &["lambda = 0"],
        samples: &["lambda=0"],
        betti: Some((2, 4)),
        has_symplectic: false,
        has_complex: true,
        cite: C52,
        cells: &[(1, "J(e0)=alpha3, J(e1)=e2"), (2, "J(e0)=e3, J(e1)=e2")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "d'4,lambda",
        entry: "d'4,lambda",
        in_table: true,
        constraints: &["lambda > 0"],
        samples: &["lambda=1", "lambda=1/2"],
        betti: Some((1, 1)),
        has_symplectic: true,
        has_complex: true,
        cite: C51,
        cells: &[
            (0, "J(e0)=2*lambda*alpha3, J(e1)=alpha2"),
            (1, "J(e0)=alpha3, J(e1)=e2"),
            (2, "J(e0)=e3, J(e1)=e2"),
        ],
        table_basis: &[],
        corrections: &[],
    },
    // not rows of the table
    RowData {
        label: "r4,mu,-mu",
        entry: "r4,mu,-mu",
        in_table: false,
        constraints: &[],
        samples: &["mu=-1/2", "mu=-1/3"],
        betti: None,
        has_symplectic: true,
        has_complex: false,
        cite: C52,
        cells: &[(0, "J(e0)=alpha1, J(e2)=alpha3"), (1, "J(e0)=e1, J(e2)=alpha3")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "aff(R)",
        entry: "aff(R)",
        in_table: false,
        constraints: &[],
        samples: &[""],
        betti: None,
        has_symplectic: true,
        has_complex: true,
        cite: NONE,
        cells: &[(0, "J(e0)=alpha1"), (1, "J(e0)=e1")],
        table_basis: &[],
        corrections: &[],
    },
    RowData {
        label: "g6",
        entry: "g6",
        in_table: false,
        constraints: &[],
        samples: &["mu=1", "mu=-2"],
        betti: None,
        has_symplectic: false,
        has_complex: false,
        cite: NONE,
        cells: &[
            (
                1,
                "J(X1)=alpha6, J(X2)=alpha5-mu*alpha6, J(X3)=X4, J(X4)=-X3, \
                 J(X5)=-alpha2, J(X6)=-alpha1+mu*alpha2, J(alpha1)=mu*X5+X6, J(alpha2)=X5, \
                 J(alpha3)=alpha4, J(alpha4)=-alpha3, J(alpha5)=-mu*X1-X2, J(alpha6)=-X1",
            ),
            (
                2,
                "J(X1)=X2, J(X3)=X4, J(X5)=-mu*X1-alpha6, J(X6)=alpha5, \
                 J(alpha1)=alpha2+mu*alpha5, J(alpha2)=-alpha1+mu*X6, J(alpha3)=alpha4, \
                 J(alpha6)=-mu*X2+X5",
            ),
        ],
        table_basis: &[],
        corrections: &[],
    },
];
