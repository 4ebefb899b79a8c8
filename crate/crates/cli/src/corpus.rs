//! Builtin example presentations, stored in the same `ring v1` text format
//! the `classify` command reads from disk.

use codepth3::koszul::RingPresentation;

/// One named presentation with a single-line description of its generators.
pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

pub const EXAMPLES: [Example; 9] = [
    Example {
        name: "squares3",
        summary: "(x^2, y^2, z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:2,0,0\ngen 1:0,2,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "sqcube_l3",
        summary: "(x,y)^2 + (z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:2,0,0\ngen 1:1,1,0\ngen 1:0,2,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "sqcube_l4",
        summary: "(x,y)^3 + (z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:3,0,0\ngen 1:2,1,0\ngen 1:1,2,0\ngen 1:0,3,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "xh_l2",
        summary: "x(x,y) + (z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:2,0,0\ngen 1:1,1,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "xh_l3",
        summary: "x(x,y)^2 + (z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:3,0,0\ngen 1:2,1,0\ngen 1:1,2,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "wxwy",
        summary: "(xy, xz) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:1,1,0\ngen 1:1,0,1\n",
    },
    Example {
        name: "h21",
        summary: "(x^2, xy, z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:2,0,0\ngen 1:1,1,0\ngen 1:0,0,2\n",
    },
    Example {
        name: "gor5",
        summary: "(xy, xz, yz, x^2 - y^2, y^2 - z^2) in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:1,1,0\ngen 1:1,0,1\ngen 1:0,1,1\ngen -1:0,2,0 1:2,0,0\ngen -1:0,0,2 1:0,2,0\n",
    },
    Example {
        name: "golod_w",
        summary: "x(x,y,z)^2 in k[x,y,z]",
        text: "ring v1\nfield 0\nvars 3\ngen 1:3,0,0\ngen 1:2,1,0\ngen 1:2,0,1\ngen 1:1,2,0\ngen 1:1,1,1\ngen 1:1,0,2\n",
    },
];

pub fn find(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

impl Example {
    /// Parses the stored text; the corpus is covered by tests, so a parse
    /// failure here is a programming error.
    pub fn presentation(&self) -> RingPresentation {
        RingPresentation::parse(self.text).expect("builtin example parses")
    }
}
