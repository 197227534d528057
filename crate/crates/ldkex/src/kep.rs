//! Key establishment over a mutually left distributive platform.
//!
//! Fix public generator lists `t_1..t_mA` (Alice's side) and `s_1..s_mB`
//! (Bob's side) and a public anchor `a0` given by a tree word over the `t`
//! list with pool A operations. Alice's secret is a list of multipliers
//! `a_1..a_kA`, each a tree word over the `t` list with pool A operations,
//! together with pool A operation choices `oA`; her morphism is
//!
//! ```text
//! alpha(y) = a_kA oA_kA ( ... (a_2 oA_2 (a_1 oA_1 y)) ... )
//! ```
//!
//! Bob mirrors this over the `s` list with pool B throughout. Mutual left
//! distributivity makes `alpha` an endomorphism for every pool B operation
//! and `beta` one for every pool A operation, which drives the exchange:
//!
//! - Alice sends `alpha(s_j)` for every `j` plus `p0 = alpha(a0)`.
//! - Bob sends `beta(t_i)` for every `i`.
//! - Alice recovers `beta(a0)` by evaluating the public anchor tree word
//!   over Bob's images and applies her own morphism: `K_A = alpha(beta(a0))`.
//! - Bob evaluates each of his multiplier words over Alice's images, which
//!   yields `alpha(b_k)` since his words only use pool B operations, and
//!   folds them over `p0`: `K_B = alpha(b_kB) oB ( ... (alpha(b_1) oB p0))`,
//!   again `alpha(beta(a0))`.
//!
//! Both sides end at the same element; agreement is checked on canonical
//! byte encodings.

use rand::Rng;
use rand::RngCore;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::eval::{iterated_left_mul, TreeWord};
use crate::magma::{OpId, Platform, Pool};
use crate::tree::TreeVector;

/// Sizes drawn when generating parameters and private keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeConfig {
    /// `mA`: generators on Alice's side.
    pub alice_generators: usize,
    /// `mB`: generators on Bob's side.
    pub bob_generators: usize,
    /// Internal nodes of the public anchor tree word.
    pub anchor_tree_size: usize,
    /// `kA`: multipliers in Alice's morphism.
    pub alice_multipliers: usize,
    /// `kB`: multipliers in Bob's morphism.
    pub bob_multipliers: usize,
    /// Internal nodes of each private multiplier tree word.
    pub multiplier_tree_size: usize,
}

/// Desk-scale defaults: small enough for braid normal forms to stay fast,
/// large enough to exercise every code path.
impl Default for ExchangeConfig {
    fn default() -> Self {
        ExchangeConfig {
            alice_generators: 4,
            bob_generators: 4,
            anchor_tree_size: 4,
            alice_multipliers: 3,
            bob_multipliers: 3,
            multiplier_tree_size: 4,
        }
    }
}

impl ExchangeConfig {
    pub fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("alice generator count", self.alice_generators),
            ("bob generator count", self.bob_generators),
            ("alice multiplier count", self.alice_multipliers),
            ("bob multiplier count", self.bob_multipliers),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("{what} must be positive")));
            }
        }
        Ok(())
    }
}

/// Everything both parties and any observer see.
#[derive(Debug, Clone)]
pub struct PublicParams<P: Platform> {
    pub platform: P,
    pub gens_t: Vec<P::Elem>,
    pub gens_s: Vec<P::Elem>,
    /// Pool A tree word over `gens_t` defining the anchor `a0`.
    pub anchor_word: TreeWord,
}

/// Alice's private key: multiplier tree words and morphism operations, all
/// pool A.
#[derive(Debug, Clone)]
pub struct AlicePrivate {
    pub multiplier_words: Vec<TreeWord>,
    pub morphism_ops: Vec<OpId>,
}

/// Bob's private key, the pool B mirror image.
#[derive(Debug, Clone)]
pub struct BobPrivate {
    pub multiplier_words: Vec<TreeWord>,
    pub morphism_ops: Vec<OpId>,
}

/// Alice's public message.
#[derive(Debug, Clone)]
pub struct AliceMessage<E> {
    /// `alpha(s_j)`, one per Bob-side generator.
    pub images_s: Vec<E>,
    /// `alpha(a0)`.
    pub p0: E,
}

/// Bob's public message: `beta(t_i)`, one per Alice-side generator.
#[derive(Debug, Clone)]
pub struct BobMessage<E> {
    pub images_t: Vec<E>,
}

fn random_tree_word<P: Platform>(
    platform: &P,
    pool: Pool,
    generator_count: usize,
    tree_size: usize,
    rng: &mut dyn RngCore,
) -> Result<TreeWord> {
    let tree = TreeVector::sample(tree_size, rng)?;
    let pool_size = platform.pool_size(pool);
    let ops = (0..tree_size)
        .map(|_| OpId::new(pool, rng.gen_range(0..pool_size)))
        .collect();
    let leaf_indices = (0..tree_size + 1)
        .map(|_| rng.gen_range(0..generator_count))
        .collect();
    TreeWord::new(tree, ops, leaf_indices)
}

impl<P: Platform> PublicParams<P> {
    /// Draw generators and the anchor word.
    pub fn generate(platform: P, cfg: &ExchangeConfig, rng: &mut dyn RngCore) -> Result<Self> {
        cfg.validate()?;
        if platform.pool_size(Pool::A) == 0 || platform.pool_size(Pool::B) == 0 {
            return Err(Error::Config("platform has an empty operation pool".into()));
        }
        let gens_t = (0..cfg.alice_generators)
            .map(|_| platform.random_element(rng))
            .collect::<Vec<_>>();
        let gens_s = (0..cfg.bob_generators)
            .map(|_| platform.random_element(rng))
            .collect::<Vec<_>>();
        let anchor_word = random_tree_word(
            &platform,
            Pool::A,
            cfg.alice_generators,
            cfg.anchor_tree_size,
            rng,
        )?;
        Ok(PublicParams {
            platform,
            gens_t,
            gens_s,
            anchor_word,
        })
    }

    /// The anchor element `a0`.
    pub fn anchor(&self) -> Result<P::Elem> {
        self.anchor_word.evaluate(&self.platform, &self.gens_t)
    }

    pub fn generate_alice(&self, cfg: &ExchangeConfig, rng: &mut dyn RngCore) -> Result<AlicePrivate> {
        let multiplier_words = (0..cfg.alice_multipliers)
            .map(|_| {
                random_tree_word(
                    &self.platform,
                    Pool::A,
                    self.gens_t.len(),
                    cfg.multiplier_tree_size,
                    rng,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let pool = self.platform.pool_size(Pool::A);
        let morphism_ops = (0..cfg.alice_multipliers)
            .map(|_| OpId::a(rng.gen_range(0..pool)))
            .collect();
        Ok(AlicePrivate {
            multiplier_words,
            morphism_ops,
        })
    }

    pub fn generate_bob(&self, cfg: &ExchangeConfig, rng: &mut dyn RngCore) -> Result<BobPrivate> {
        let multiplier_words = (0..cfg.bob_multipliers)
            .map(|_| {
                random_tree_word(
                    &self.platform,
                    Pool::B,
                    self.gens_s.len(),
                    cfg.multiplier_tree_size,
                    rng,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let pool = self.platform.pool_size(Pool::B);
        let morphism_ops = (0..cfg.bob_multipliers)
            .map(|_| OpId::b(rng.gen_range(0..pool)))
            .collect();
        Ok(BobPrivate {
            multiplier_words,
            morphism_ops,
        })
    }

    /// Alice's multiplier elements `a_1..a_kA`.
    pub fn alice_multipliers(&self, alice: &AlicePrivate) -> Result<Vec<P::Elem>> {
        alice
            .multiplier_words
            .iter()
            .map(|w| w.evaluate(&self.platform, &self.gens_t))
            .collect()
    }

    /// Apply Alice's morphism to `y`.
    pub fn apply_alice_morphism(&self, alice: &AlicePrivate, y: &P::Elem) -> Result<P::Elem> {
        let multipliers = self.alice_multipliers(alice)?;
        iterated_left_mul(&self.platform, &multipliers, &alice.morphism_ops, y)
    }

    /// Alice's public message: her images of Bob's generators and of the
    /// anchor.
    pub fn alice_message(&self, alice: &AlicePrivate) -> Result<AliceMessage<P::Elem>> {
        let images_s = self
            .gens_s
            .iter()
            .map(|s| self.apply_alice_morphism(alice, s))
            .collect::<Result<Vec<_>>>()?;
        let p0 = self.apply_alice_morphism(alice, &self.anchor()?)?;
        Ok(AliceMessage { images_s, p0 })
    }

    /// Bob's public message: his images of Alice's generators.
    pub fn bob_message(&self, bob: &BobPrivate) -> Result<BobMessage<P::Elem>> {
        let multipliers = bob
            .multiplier_words
            .iter()
            .map(|w| w.evaluate(&self.platform, &self.gens_s))
            .collect::<Result<Vec<_>>>()?;
        let images_t = self
            .gens_t
            .iter()
            .map(|t| iterated_left_mul(&self.platform, &multipliers, &bob.morphism_ops, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(BobMessage { images_t })
    }

    /// Alice's side of the key: evaluate the anchor word over Bob's images
    /// to get `beta(a0)`, then apply her morphism.
    pub fn alice_key(
        &self,
        alice: &AlicePrivate,
        bob_msg: &BobMessage<P::Elem>,
    ) -> Result<P::Elem> {
        if bob_msg.images_t.len() != self.gens_t.len() {
            return Err(Error::Protocol(format!(
                "bob's message carries {} images, expected {}",
                bob_msg.images_t.len(),
                self.gens_t.len()
            )));
        }
        let beta_a0 = self.anchor_word.evaluate(&self.platform, &bob_msg.images_t)?;
        self.apply_alice_morphism(alice, &beta_a0)
    }

    /// Bob's side of the key: evaluate his multiplier words over Alice's
    /// images (valid because they use pool B operations only) and fold them
    /// over `p0` with his morphism operations.
    pub fn bob_key(&self, bob: &BobPrivate, alice_msg: &AliceMessage<P::Elem>) -> Result<P::Elem> {
        if alice_msg.images_s.len() != self.gens_s.len() {
            return Err(Error::Protocol(format!(
                "alice's message carries {} images, expected {}",
                alice_msg.images_s.len(),
                self.gens_s.len()
            )));
        }
        let alpha_multipliers = bob
            .multiplier_words
            .iter()
            .map(|w| w.evaluate(&self.platform, &alice_msg.images_s))
            .collect::<Result<Vec<_>>>()?;
        iterated_left_mul(
            &self.platform,
            &alpha_multipliers,
            &bob.morphism_ops,
            &alice_msg.p0,
        )
    }
}

/// A full run: parameters, both private keys, both messages, both derived
/// keys, the agreement verdict, and the wall-clock cost.
///
/// `elapsed` never enters any serialized form that is required to be
/// deterministic; it is informational only.
#[derive(Debug, Clone)]
pub struct Exchange<P: Platform> {
    pub params: PublicParams<P>,
    pub alice: AlicePrivate,
    pub bob: BobPrivate,
    pub alice_msg: AliceMessage<P::Elem>,
    pub bob_msg: BobMessage<P::Elem>,
    pub key_alice: P::Elem,
    pub key_bob: P::Elem,
    pub key_alice_bytes: Vec<u8>,
    pub key_bob_bytes: Vec<u8>,
    pub elapsed: std::time::Duration,
}

impl<P: Platform> Exchange<P> {
    pub fn agreed(&self) -> bool {
        self.key_alice_bytes == self.key_bob_bytes
    }
}

/// Run one exchange with separate seeds for the parameter draw and each
/// party's private draw.
pub fn run_exchange<P: Platform>(
    platform: P,
    cfg: &ExchangeConfig,
    seed_params: u64,
    seed_alice: u64,
    seed_bob: u64,
) -> Result<Exchange<P>> {
    use rand::SeedableRng;
    let started = std::time::Instant::now();
    let mut rng_params = rand_chacha::ChaCha8Rng::seed_from_u64(seed_params);
    let mut rng_alice = rand_chacha::ChaCha8Rng::seed_from_u64(seed_alice);
    let mut rng_bob = rand_chacha::ChaCha8Rng::seed_from_u64(seed_bob);

    let params = PublicParams::generate(platform, cfg, &mut rng_params)?;
    let alice = params.generate_alice(cfg, &mut rng_alice)?;
    let bob = params.generate_bob(cfg, &mut rng_bob)?;
    let alice_msg = params.alice_message(&alice)?;
    let bob_msg = params.bob_message(&bob)?;
    let key_alice = params.alice_key(&alice, &bob_msg)?;
    let key_bob = params.bob_key(&bob, &alice_msg)?;
    let key_alice_bytes = params.platform.canonical_bytes(&key_alice)?;
    let key_bob_bytes = params.platform.canonical_bytes(&key_bob)?;
    Ok(Exchange {
        params,
        alice,
        bob,
        alice_msg,
        bob_msg,
        key_alice,
        key_bob,
        key_alice_bytes,
        key_bob_bytes,
        elapsed: started.elapsed(),
    })
}

/// SHA-256 of a canonical key encoding, for use as session key material.
pub fn shared_key_digest(canonical_key: &[u8]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(canonical_key);
    hasher.finalize().into()
}
