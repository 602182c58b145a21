//! The conjugation action of a normalizing subgroup `N` on the elements of
//! `Q`, realizing `N / C_N(Q)` as a permutation group of degree `|Q|`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct ActionImage {
    source: Group,
    target_points: Vec<Perm>,
    image: Group,
}

impl ActionImage {
    /// Action of `n` on `q` by conjugation. Fails unless `n` normalizes `q`.
    pub fn new(n: &Group, q: &Group) -> Result<ActionImage> {
        if n.degree() != q.degree() || !q.is_normalized_by_group(n) {
            return Err(Error::DoesNotNormalize);
        }
        let target_points = q.elements().to_vec();
        let image_gens: Vec<Perm> = n.generators().iter().map(|g| project_onto(&target_points, g)).collect();
        let image = Group::generated_with_limit(target_points.len(), &image_gens, n.order())?;
        Ok(ActionImage { source: n.clone(), target_points, image })
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target_points(&self) -> &[Perm] {
        &self.target_points
    }

    pub fn image(&self) -> &Group {
        &self.image
    }

    /// Permutation of `target_points` (by index) induced by `g ∈ N`.
    pub fn project(&self, g: &Perm) -> Result<Perm> {
        if !self.source.contains(g) {
            return Err(Error::NotInAmbient);
        }
        Ok(project_onto(&self.target_points, g))
    }

    /// `C_N(Q)`, the kernel of [`ActionImage::project`].
    pub fn kernel(&self) -> Group {
        let id = self.image.identity();
        let elements = self
            .source
            .elements()
            .iter()
            .filter(|g| project_onto(&self.target_points, g) == id)
            .cloned()
            .collect();
        Group::from_subgroup_elements(self.source.degree(), elements)
    }
}

fn project_onto(points: &[Perm], g: &Perm) -> Perm {
    let images = points
        .iter()
        .map(|x| {
            let y = x.conjugate_by(g);
            points.binary_search(&y).expect("normalizing element maps Q into Q") as u32
        })
        .collect();
    Perm::from_images(images).expect("conjugation permutes Q")
}
