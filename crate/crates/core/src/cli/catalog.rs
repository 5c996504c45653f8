//! Built-in surfaces addressable by name.

use crate::equivalence::{affine_context, rational_context};
use crate::hypersurface::Hypersurface;
use crate::polyring::{Polynomial, VarContext};

use super::expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub variables: &'static str,
    pub expression: &'static str,
    pub description: &'static str,
    /// Affine entries are homogenized by a new leading coordinate `z0`
    /// (variables renamed `x_i -> z_i`) to build their hypersurface.
    pub affine: bool,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "bourgain",
        variables: "z0,z1,z2,z3,z4",
        expression: "z1*z4^2 + z0*z2*z4 - z0^2*z3",
        description: "Bourgain cubic, tangentially degenerate of rank 2",
        affine: false,
    },
    CatalogEntry {
        name: "bourgain-affine",
        variables: "x1,x2,x3,x4",
        expression: "x1*x4^2 + x2*x4 - x3",
        description: "affine Bourgain cubic in R^4",
        affine: true,
    },
    CatalogEntry {
        name: "sacksteder-rational",
        variables: "x1,x2,x4,u,v",
        expression: "(x4 + x1)*u^2 + (x4 - x1)*v^2 - 2*x2*u*v",
        description: "Sacksteder hypersurface after the half-angle substitution",
        affine: false,
    },
    CatalogEntry {
        name: "cylinder-control",
        variables: "z0,z1,z2,z3,z4",
        expression: "z1^2 - z0*z4",
        description: "quadric cone over a conic, Gauss rank 1",
        affine: false,
    },
    CatalogEntry {
        name: "quadric-control",
        variables: "z0,z1,z2,z3,z4",
        expression: "z0*z4 - z1^2 - z2^2 - z3^2",
        description: "smooth quadric, Gauss rank 3",
        affine: false,
    },
];

impl CatalogEntry {
    pub fn context(&self) -> VarContext {
        match self.name {
            "bourgain-affine" => affine_context(),
            "sacksteder-rational" => rational_context(),
            _ => VarContext::parse_list(self.variables).expect("distinct names"),
        }
    }

    /// The polynomial as written, in [`context`](Self::context).
    pub fn polynomial(&self) -> Polynomial {
        expr::parse(self.expression, &self.context()).expect("catalog expression parses")
    }

    pub fn hypersurface(&self) -> Hypersurface {
        let f = self.polynomial();
        let f = if self.affine {
            let z = VarContext::projective();
            let ctx = self.context();
            let renamed = ctx
                .names()
                .iter()
                .enumerate()
                .fold(crate::polyring::Substitution::new(&z), |s, (i, n)| {
                    s.with(n, Polynomial::var_at(&z, i + 1))
                });
            f.substitute(&renamed)
                .expect("renaming covers every variable")
                .homogenize("z0", f.total_degree())
                .expect("degree matches")
        } else {
            f
        };
        Hypersurface::new(f).expect("catalog entries are homogeneous")
    }
}

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}
