use crate::derivation::{forward, Derivation, SchemaMismatch};
use crate::formula::{Formula, Judgement, Notation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeStyle {
    /// Premises above their conclusion, indented one step per level.
    Ascii,
    /// `bussproofs` commands.
    Latex,
}

struct Node<'a> {
    judgement: Judgement,
    derivation: &'a Derivation,
    premises: Vec<Node<'a>>,
}

/// Pairs every node with its conclusion; `d` must be schema-valid.
fn annotate(d: &Derivation) -> Node<'_> {
    let premises: Vec<Node> = d.premises().into_iter().map(annotate).collect();
    let judgement = match d {
        Derivation::Ax(a) => Judgement::new(Formula::El(a.clone()), Formula::El(a.clone())),
        _ => {
            let js: Vec<&Judgement> = premises.iter().map(|p| &p.judgement).collect();
            forward(d.tag(), &js).expect("validated derivation")
        }
    };
    Node {
        judgement,
        derivation: d,
        premises,
    }
}

pub fn render_proof_tree(d: &Derivation, style: TreeStyle) -> Result<String, SchemaMismatch> {
    d.infer()?;
    let root = annotate(d);
    let mut out = String::new();
    match style {
        TreeStyle::Ascii => ascii(&root, 0, &mut out),
        TreeStyle::Latex => {
            out.push_str("\\begin{prooftree}\n");
            latex(&root, &mut out);
            out.push_str("\\end{prooftree}\n");
        }
    }
    Ok(out)
}

fn ascii(node: &Node, indent: usize, out: &mut String) {
    for p in &node.premises {
        ascii(p, indent + 2, out);
    }
    out.push_str(&" ".repeat(indent));
    out.push_str(&node.judgement.render(Notation::Unicode));
    out.push_str("   (");
    out.push_str(node.derivation.tag().unicode_name());
    out.push_str(")\n");
}

fn latex(node: &Node, out: &mut String) {
    if node.premises.is_empty() {
        out.push_str("\\AxiomC{}\n");
    }
    for p in &node.premises {
        latex(p, out);
    }
    out.push_str(&format!("\\RightLabel{{({})}}\n", node.derivation.tag().unicode_name()));
    let cmd = if node.premises.len() == 2 {
        "BinaryInfC"
    } else {
        "UnaryInfC"
    };
    out.push_str(&format!("\\{cmd}{{{}}}\n", node.judgement.render(Notation::Unicode)));
}
