use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {size} exceeds the budget of {budget} elements")]
    SizeBudgetExceeded { size: u64, budget: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no discrete logarithm")]
    ZeroHasNoLog,
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    InvalidModulus(u32),
    #[error("element is not a generator of the multiplicative group")]
    NotPrimitive,
    #[error("element does not belong to the field")]
    InvalidElement,
    #[error("cyclotomic integers over different roots of unity: ζ_{0} and ζ_{1}")]
    MixedRootOrders(u32, u32),
    #[error("coset index {index} out of range for k = {k}")]
    IndexOutOfRange { index: u64, k: u64 },
    #[error("Γ({k},{q}) is not directed")]
    NotDirected { k: u64, q: u64 },
    #[error("Waring number for k = {k} over F_{q} does not exist: {reason}")]
    NumberDoesNotExist { k: u64, q: u64, reason: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("family hypothesis violated: {0}")]
    HypothesisViolated(String),
}
