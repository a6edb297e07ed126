use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::metrics::{self, Enumeration, MetricResult};
use crate::spectral::{self, SpectralResult};
use crate::vertex_set::VertexSet;

use super::report::{compare, Quantity, Theorem, TheoremReport};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub enumeration: Enumeration,
    /// Absolute tolerance for comparisons involving the spectral gap.
    pub tol: f64,
    /// Largest graph on which every conductance minimizer is listed.
    pub minimizer_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { enumeration: Enumeration::default(), tol: 1e-9, minimizer_limit: 16 }
    }
}

/// Lazily computed metrics of one graph, shared by all checks on it.
pub struct Analysis<'g> {
    id: String,
    g: &'g Graph,
    opts: VerifyOptions,
    vat: OnceCell<Result<MetricResult>>,
    phi: OnceCell<Result<MetricResult>>,
    spectrum: OnceCell<Result<SpectralResult>>,
}

impl<'g> Analysis<'g> {
    pub fn new(id: impl Into<String>, g: &'g Graph, opts: VerifyOptions) -> Self {
        Analysis {
            id: id.into(),
            g,
            opts,
            vat: OnceCell::new(),
            phi: OnceCell::new(),
            spectrum: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn vat(&self) -> Result<&MetricResult> {
        self.vat
            .get_or_init(|| metrics::vat_exact_with(self.g, &self.opts.enumeration))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn conductance(&self) -> Result<&MetricResult> {
        self.phi
            .get_or_init(|| metrics::conductance_exact_with(self.g, &self.opts.enumeration))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn spectrum(&self) -> Result<&SpectralResult> {
        self.spectrum
            .get_or_init(|| spectral::lambda2(self.g))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn admit(&self) -> Result<()> {
        if self.g.n() < 2 {
            return Err(Error::TrivialGraph);
        }
        if !self.g.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        Ok(())
    }

    /// Degree of a connected regular graph within the enumeration limit.
    fn regular(&self) -> Result<u64> {
        self.admit()?;
        let d = self.g.regularity().ok_or(Error::NotRegular)?;
        let limit = self.opts.enumeration.limit.min(metrics::HARD_LIMIT);
        if self.g.n() > limit {
            return Err(Error::TooLarge { n: self.g.n(), limit });
        }
        Ok(d as u64)
    }

    fn report(
        &self,
        theorem: Theorem,
        lhs: Quantity,
        rhs: Quantity,
        witnesses: Vec<VertexSet>,
    ) -> TheoremReport {
        let (holds, strict_holds) = compare(lhs, rhs, self.opts.tol);
        TheoremReport {
            theorem,
            graph_id: self.id.clone(),
            n: self.g.n(),
            m: self.g.m(),
            d: self.g.regularity(),
            lhs,
            rhs,
            holds,
            strict_holds,
            slack: rhs.to_f64() - lhs.to_f64(),
            witnesses,
        }
    }

    fn gap(&self) -> Result<Quantity> {
        Ok(Quantity::Real(self.spectrum()?.gap))
    }

    /// Whether `Φ <= 1/d²`.
    fn sparse(&self, d: u64) -> Result<bool> {
        Ok(self.conductance()?.value <= Fraction::new(1, d * d))
    }

    pub fn cheeger(&self) -> Result<Vec<TheoremReport>> {
        self.regular()?;
        let phi = self.conductance()?;
        let gap = self.gap()?;
        let w = vec![phi.witness.clone()];
        Ok(vec![
            self.report(Theorem::CheegerLower, (phi.value.pow2() / 2).into(), gap, w.clone()),
            self.report(Theorem::CheegerUpper, gap, (phi.value * 2).into(), w),
        ])
    }

    pub fn thm12(&self) -> Result<Vec<TheoremReport>> {
        let d = self.regular()?;
        let (tau, phi) = (self.vat()?, self.conductance()?);
        let w = vec![tau.witness.clone(), phi.witness.clone()];
        let mut out = Vec::new();
        if self.sparse(d)? {
            out.push(self.report(Theorem::Thm12Conditional, tau.value.into(), (phi.value * d).into(), w.clone()));
        }
        out.push(self.report(Theorem::Thm12Unconditional, tau.value.into(), (phi.value * (d * d)).into(), w));
        Ok(out)
    }

    pub fn thm13(&self) -> Result<Vec<TheoremReport>> {
        let d = self.regular()?;
        let (tau, phi) = (self.vat()?, self.conductance()?);
        let w = vec![phi.witness.clone(), tau.witness.clone()];
        Ok(vec![self.report(Theorem::Thm13, phi.value.into(), (tau.value * d).into(), w)])
    }

    pub fn cor14(&self) -> Result<Vec<TheoremReport>> {
        let d = self.regular()?;
        let tau = self.vat()?;
        let gap = self.gap()?;
        let sparse = self.sparse(d)?;
        let w = vec![tau.witness.clone()];
        let tau2 = tau.value.pow2();
        let mut out = vec![
            self.report(Theorem::Cor14GeneralLower, (tau2 / (2 * d.pow(4))).into(), gap, w.clone()),
            self.report(Theorem::Cor14GeneralUpper, gap, (tau.value * (2 * d)).into(), w.clone()),
        ];
        if sparse {
            out.push(self.report(Theorem::Cor14ConditionalLower, (tau2 / (2 * d * d)).into(), gap, w));
        }
        Ok(out)
    }

    pub fn lemma23(&self) -> Result<Vec<TheoremReport>> {
        self.regular()?;
        if self.g.n() > self.opts.minimizer_limit {
            return Err(Error::TooLarge { n: self.g.n(), limit: self.opts.minimizer_limit });
        }
        let (_, minimizers) = metrics::conductance_minimizers(self.g, &self.opts.enumeration)?;
        let connected: Vec<VertexSet> =
            minimizers.into_iter().filter(|s| self.g.induces_connected(s)).collect();
        let count = connected.len() as u64;
        let witnesses = connected.into_iter().take(1).collect();
        Ok(vec![self.report(Theorem::Lemma23, 1.into(), count.into(), witnesses)])
    }

    pub fn proof_facts(&self) -> Result<Vec<TheoremReport>> {
        let d = self.regular()?;
        let tau = self.vat()?;
        let (t, others) = metrics::vat_witness_components(self.g, tau);
        let s = tau.witness.count() as u64;
        let parts: Vec<&VertexSet> = others.iter().chain(std::iter::once(&t)).collect();
        let cut_sum: u64 = parts.iter().map(|c| self.g.cut_size(c) as u64).sum();
        let size_sum: u64 = parts.iter().map(|c| c.count() as u64).sum();
        let rest = self.g.n() as u64 - s - t.count() as u64;
        let w = vec![tau.witness.clone(), t];
        Ok(vec![
            self.report(Theorem::ProofFact1, cut_sum.into(), (d * s).into(), w.clone()),
            self.report(Theorem::ProofFact2, (rest + 1).into(), size_sum.into(), w),
        ])
    }

    /// Range checks for τ and Φ; valid on irregular graphs too.
    pub fn remarks(&self) -> Result<Vec<TheoremReport>> {
        self.admit()?;
        let (tau, phi) = (self.vat()?, self.conductance()?);
        let cmax_nonempty = !self.g.largest_component(&tau.witness).map_or(true, |c| c.is_empty());
        let mut r21 = self.report(Theorem::Remark21, tau.value.into(), 1.into(), vec![tau.witness.clone()]);
        r21.holds &= !tau.value.is_zero() && cmax_nonempty;
        r21.strict_holds &= r21.holds;
        let mut r22 = self.report(Theorem::Remark22, phi.value.into(), 1.into(), vec![phi.witness.clone()]);
        r22.holds &= !phi.value.is_zero();
        r22.strict_holds &= r22.holds;
        Ok(vec![r21, r22])
    }
}

fn analysis(g: &Graph) -> Analysis<'_> {
    Analysis::new("", g, VerifyOptions::default())
}

pub fn check_cheeger(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).cheeger()
}

pub fn check_thm12(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).thm12()
}

pub fn check_thm13(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).thm13()
}

pub fn check_cor14(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).cor14()
}

pub fn check_lemma23(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).lemma23()
}

pub fn check_proof_facts(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).proof_facts()
}

pub fn check_remarks(g: &Graph) -> Result<Vec<TheoremReport>> {
    analysis(g).remarks()
}
