/// Graph sentences of quantifier depth at most 3, used by the rewrite
/// harness and the size checks.
pub const CORPUS: [&str; 20] = [
    "exists x. exists y. (E(x,y) & ~(x=y))",
    "forall x. exists y. E(x,y)",
    "exists x. forall y. (~(x=y) -> E(x,y))",
    "exists x. exists y. exists z. ((E(x,y) & E(y,z)) & E(x,z))",
    "exists x. exists y. exists z. (((~(x=y) & ~(y=z)) & ~(x=z)) & ((~E(x,y) & ~E(y,z)) & ~E(x,z)))",
    "forall x. forall y. (E(x,y) -> E(y,x))",
    "forall x. ~E(x,x)",
    "exists x. forall y. ~E(x,y)",
    "forall x. forall y. (x=y | E(x,y))",
    "exists x. exists y. (~(x=y) & ~E(x,y))",
    "forall x. exists y. exists z. ((E(x,y) & E(x,z)) & ~(y=z))",
    "exists x. exists y. exists z. ((E(x,y) & E(y,z)) & ~(x=z))",
    "forall x. forall y. forall z. ((E(x,y) & E(y,z)) -> (x=z | E(x,z)))",
    "exists x. forall y. (E(x,y) -> forall z. (E(y,z) -> z=x))",
    "forall x. (exists y. E(x,y) | forall y. ~E(x,y))",
    "exists x. exists y. (E(x,y) & forall z. (E(z,x) -> z=y))",
    "forall x. forall y. (~(x=y) -> exists z. (E(x,z) & E(y,z)))",
    "exists x. (exists y. E(x,y) & exists y. (~(x=y) & ~E(x,y)))",
    "~exists x. exists y. exists z. ((E(x,y) & E(y,z)) & E(z,x))",
    "forall x. forall y. (E(x,y) -> exists z. (E(x,z) & E(y,z)))",
];
