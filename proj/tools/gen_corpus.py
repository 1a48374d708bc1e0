# Regenerates corpus/identities.json.
import json
import os
C=[]
def add(name, family, desc, **kw):
    d={"name":name,"family":family,"description":desc}
    d.update(kw); C.append(d)
def B(kind,index,alphabet=None,alpha=None):
    b={"build":{"kind":kind,"index":index}}
    if alpha: b["build"]["alpha"]=alpha
    if alphabet is not None: b["alphabet"]=alphabet
    return b

# generic (q,t)
add("saturate-P","saturate","P of a saturated partition is x1...xN to the last part times P of the reduced one",
    params={"kind":"P","nmin":2,"nmax":4,"wmax":8,"count":20})
add("saturate-MS","saturate","MS of a saturated partition splits off prod (x_i - q^k), k below the last part",
    params={"kind":"MS","nmin":2,"nmax":4,"wmax":8,"count":20})
add("standard-spec","standard-spec","MS_lambda at X_n + (1-t^k)/(1-t), two displayed equalities",
    params={"nmax":4,"wmax":7,"count":20})
add("principal-evaluation","principal-evaluation","MS_lambda(X_m + reciprocal sum of the tail) against prod (x_i - q^j t^floor_j)",
    params={"nmax":5,"wmax":7,"count":15})
add("principal-chain","principal-chain","worked chain for [6,6,4,3,3,1,1,1,0]",
    params={"index":"[6,6,4,3,3,1,1,1,0]",
            "expected":"(x1-t)*(x2-t)*(x1-q*t^4)*(x2-q*t^4)*(x1-q^2*t^4)*(x2-q^2*t^4)*(x1-q^3*t^6)*(x2-q^3*t^6)*(x1-q^4*t^7)*(x2-q^4*t^7)*(x1-q^5*t^7)*(x2-q^5*t^7)"},
    )
add("principal-chain-built","principal-chain","chain product against the built polynomial for small partitions",
    params={"index":"[3,2,0]","with_build":1},
    grid=[{"index":"[4,4,2,1,0]"},{"index":"[2,2,1,0,0]"},{"index":"[3,1,1,0]"}])
add("ms32-golden","explicit","MS_32 in two variables, generic",
    vars=["x1","x2"], mode="UpToQTMonomial",
    lhs=B("MS","[3,2]"),
    rhs="(q^2*t+q^2-x1-x2)*(x2-1)*(x1-1)*(q-x2)*(q-x1)")
add("ms3200-golden","explicit","MS_3200 at X_2 + t^2 + t + 1, generic",
    vars=["x1","x2"], mode="UpToQTMonomial",
    lhs=B("MS","[3,2,0,0,0]",["x1","x2","t^2","t","1"]),
    rhs="(t^3-x2)*(t^3-x1)*(q*t^3-x2)*(q*t^3-x1)*(q^2*t^3+q^2*t^4-x1-x2)")
add("ms3200-standard","explicit","MS_32000 at X_2 + t^2 + t + 1 against MS_32 at t^-3 X_2",
    vars=["x1","x2"],
    lhs=B("MS","[3,2,0,0,0]",["x1","x2","t^2","t","1"]),
    rhs=B("MS","[3,2]",["t^-3*x1","t^-3*x2"]))

# admissible specializations, staircases
add("staircase-homogeneous","staircase-homogeneous","MS of a staircase is homogeneous and proportional to P",
    params={"l":2,"k":1,"s":2,"beta":1},
    grid=[{"l":1,"k":1,"s":2,"beta":1},{"l":1,"k":1,"s":2,"beta":2},{"l":1,"k":0,"s":3,"beta":2},
          {"l":2,"k":2,"s":2,"beta":1},{"l":1,"k":1,"s":3,"beta":1},{"l":2,"k":1,"s":3,"beta":1}])
PRINTED20="x2*x1*u+x1^2*u+x2^2*u-x2*x1*u^-1+x1*u^2*x2-x1^2-x2^2-x2*x1"
add("ms20-admissible","explicit","MS_20 at t=u, q=u^-2 is homogeneous: equal to P_20",spec="t=u; q=u^-2",vars=["x1","x2"],
    lhs=B("MS","[2,0]"), rhs=B("P","[2,0]"))
add("ms20-printed-P","explicit","the displayed two-variable expression at q=1/u, t=u^2 is P_20",spec="t=u^2; q=u^-1",vars=["x1","x2"],
    lhs=B("P","[2,0]"), rhs=PRINTED20)
add("ms20-printed-MS","explicit","MS_20 at q=1/u, t=u^2 is not homogeneous (t^2 q = 1 is the admissible relation)",spec="t=u^2; q=u^-1",
    vars=["x1","x2"], lhs=B("MS","[2,0]"), rhs=PRINTED20, expect="fail")
add("wheel-staircase","wheel","P_[4,2,2,0,0] satisfies the (2,2) wheel condition at t=u, q=u^-3",
    params={"l":2,"k":1,"s":2,"beta":1}, grid=[{"l":1,"k":1,"s":2,"beta":2},{"l":1,"k":1,"s":3,"beta":1}])
add("wheel-negative","wheel","P_[1,0,0] is too small to vanish on the wheel",
    params={"index":"[1,0,0]","l":2,"s":2,"expect":"fail"})
add("first-fact-wheel","first-fact-wheel","y (1-t^l)/(1-t) splits off R(X; y t^l (1-q^s)/(1-q))",
    params={"l":2,"k":1,"s":2,"beta":1},
    grid=[{"l":1,"k":1,"s":2,"beta":1},{"l":1,"k":1,"s":2,"beta":2},{"l":2,"k":2,"s":2,"beta":1},{"l":1,"k":0,"s":3,"beta":2}])
add("first-fact-wheel-example","explicit","MS_42200(x1,x2,x3,ty,y) over MS_200(q^-2 t^-2 X_3) at t=u, q=u^-3",
    spec="t=u; q=u^-3", vars=["x1","x2","x3","y"],
    lhs=B("MS","[4,2,2,0,0]",["x1","x2","x3","t*y","y"]),
    rhs={"product":["(x1-u^2*y)*(x2-u^2*y)*(x3-u^2*y)*(x1-u^-1*y)*(x2-u^-1*y)*(x3-u^-1*y)",
                    B("MS","[2,0,0]",["q^-2*t^-2*x1","q^-2*t^-2*x2","q^-2*t^-2*x3"])]})
add("fact-wheel","fact-wheel","full product for MS_St(X_k + (1-t^l)/(1-t) Y)",
    params={"l":2,"k":1,"s":2,"beta":1},
    grid=[{"l":1,"k":1,"s":2,"beta":1},{"l":1,"k":1,"s":2,"beta":2},{"l":1,"k":1,"s":3,"beta":1},
          {"l":2,"k":2,"s":2,"beta":1},{"l":1,"k":0,"s":2,"beta":2}])
add("fact-wheel-example","explicit","MS_42200(x1,ty1,y1,ty0,y0) at t=u, q=u^-3",
    spec="t=u; q=u^-3", vars=["x1","y0","y1"],
    lhs=B("MS","[4,2,2,0,0]",["x1","t*y1","y1","t*y0","y0"]),
    rhs="(x1-u^2*y0)*(x1-u^-1*y0)*(x1-u^2*y1)*(x1-u^-1*y1)*(y1-u^2*y0)*(y1-u^-1*y0)*(u*y1-u^2*y0)*(u*y1-u^-1*y0)")

# quasistaircases
add("qs-homogeneous","qs-homogeneous","MS of a quasistaircase is homogeneous and proportional to P",
    params={"l":1,"k":1,"s":2,"r":1,"beta":1},
    grid=[{"l":2,"k":1,"s":2,"r":0,"beta":1},{"l":1,"k":1,"s":2,"r":1,"beta":0},
          {"l":3,"k":3,"s":3,"r":0,"beta":0},{"l":1,"k":1,"s":3,"r":2,"beta":1},
          {"l":3,"k":1,"s":3,"r":0,"beta":0},{"l":1,"k":1,"s":3,"r":0,"beta":1}])
add("qs-omega","qs-homogeneous","MS_[3,3,3,0,0,0] at t=u, q=-u^-2",
    params={"l":3,"k":3,"s":3,"r":0,"beta":0,"spec":"t=u; q=-u^-2"})
add("qs-omega-one","qs-homogeneous","the same partition at q=u^-2 is not a highest weight case",
    params={"l":3,"k":3,"s":3,"r":0,"beta":0,"spec":"t=u; q=u^-2"}, expect="fail")
add("qs-reciprocal","qs-reciprocal","reciprocal sums of partitions inside a quasistaircase are distinct from its own; its reciprocal vector has distinct entries",
    params={"l":1,"k":1,"s":2,"r":0,"beta":1},
    grid=[{"l":1,"k":1,"s":2,"r":1,"beta":1},{"l":2,"k":1,"s":2,"r":0,"beta":1},{"l":1,"k":1,"s":3,"r":0,"beta":1},
          {"l":1,"k":1,"s":2,"r":0,"beta":2},{"l":3,"k":3,"s":3,"r":0,"beta":0},{"l":2,"k":2,"s":2,"r":1,"beta":0},
          {"l":2,"k":1,"s":3,"r":0,"beta":1},{"l":1,"k":0,"s":2,"r":2,"beta":2},{"l":2,"k":2,"s":2,"r":0,"beta":1}])
add("last-fact","last-fact","MS_QS at X_k + (1-t^l)/(1-t) Y + (1-t^n0)/(1-t) y_beta",
    params={"l":1,"k":1,"s":2,"r":1,"beta":1},
    grid=[{"l":1,"k":1,"s":3,"r":2,"beta":1},
          {"l":1,"k":1,"s":2,"r":0,"beta":2},{"l":2,"k":1,"s":2,"r":0,"beta":1}])
add("last-fact-inner-s","last-fact","inner blocks of length s instead of l: wrong once l and s differ",
    params={"l":1,"k":1,"s":2,"r":0,"beta":2,"inner":"s","expect":"fail"})
add("last-fact-example","explicit","MS_533(x1 + (1+t) y0 + (1+t+t^2+t^3+t^4) y1) at t=u, q=u^-3",
    spec="t=u; q=u^-3", vars=["x1","y0","y1"],
    lhs=B("MS","[5,3,3,0,0,0,0,0]",["x1","(1+t)*y0","(1+t+t^2+t^3+t^4)*y1"]),
    rhs="(x1-u^5*y1)*(x1-u^2*y1)*(x1-u^-1*y1)*(y0-u^5*y1)*(y0-u^2*y1)*(y0-u^-1*y1)*(u*y0-u^5*y1)*(u*y0-u^2*y1)*(u*y0-u^-1*y1)*(x1-u^2*y0)*(x1-u^-1*y0)")

# Jack
add("jack-qs","jack-qs","J_QS(X + n0 y) = prod (x_i - y)^(s+r) J_St(beta-1)(X), alpha = -(l+1)/(s-1)",
    params={"l":1,"k":1,"s":2,"r":0,"beta":1},
    grid=[{"l":1,"k":1,"s":2,"r":1,"beta":1},{"l":2,"k":1,"s":2,"r":0,"beta":1},{"l":1,"k":1,"s":2,"r":0,"beta":2},
          {"l":1,"k":1,"s":4,"r":0,"beta":1}])
add("jack-last-fact","jack-last-fact","J_QS at X_k + l Y + n0 y_beta as a product of powers",
    params={"l":1,"k":1,"s":2,"r":0,"beta":2},
    grid=[{"l":1,"k":1,"s":2,"r":1,"beta":1},{"l":2,"k":1,"s":2,"r":0,"beta":1},{"l":1,"k":1,"s":4,"r":0,"beta":1}])
add("jack-cluster-53","explicit","J_53 at alpha=-2 on 3Z + z4 + z5",
    vars=["Z","z4","z5"],
    lhs=B("J","[5,3,0,0,0]",["3*Z","z4","z5"],alpha="-2"),
    rhs={"product":["(Z-z4)^3*(Z-z5)^3", B("J","[2,0]",["z4","z5"],alpha="-2")]})
add("jack-first-cluster-53","explicit","J_53 at alpha=-2 on 2Z1 + ZF + z3 + z4",
    vars=["Z1","ZF","z3","z4"],
    lhs=B("J","[5,3,0,0,0]",["2*Z1","ZF","z3","z4"],alpha="-2"),
    rhs="144*(ZF-z4)^2*(ZF-z3)^2*(z3-z4)^2*(z3*z4+ZF*z4+ZF*z3-2*Z1*z4-2*Z1*z3-2*Z1*ZF+3*Z1^2)")
add("jack-third-cluster-64","explicit","J_64 at alpha=-2 on 3(Z1+Z2) + z7",
    vars=["Z1","Z2","z7"],
    lhs=B("J","[6,4,0,0,0,0,0]",["3*Z1","3*Z2","z7"],alpha="-2"),
    rhs="-3456*(Z1-Z2)^4*(Z1-z7)^3*(Z2-z7)^3")
add("beyond-hw","explicit","P_43210(x + (1+t) y1 + (1+t) y2) at q=t^-3",
    spec="t=u; q=u^-3", vars=["x","y1","y2"],
    lhs=B("P","[4,3,2,1,0]",["x","(1+t)*y1","(1+t)*y2"]),
    rhs="y1*y2*(y1-t*y2)*(y1-t^2*y2)*(y2-t*y1)*(y2-t^2*y1)*(t*x-y1)*(x-t^2*y1)*(t*x-y2)*(x-t^2*y2)")
add("beyond-hw-jack","explicit","J_43210 at alpha=-3 on x + 2y1 + 2y2",
    vars=["x","y1","y2"],
    lhs=B("J","[4,3,2,1,0]",["x","2*y1","2*y2"],alpha="-3"),
    rhs="y1*y2*(y1-y2)^4*(x-y1)^2*(x-y2)^2")

# R_{i;k} recursion at t=u, q=u^-2
def X(l):
    return ["(%s)*x%d"%("+".join(["1"]+["u^%d"%j for j in range(1,li)]) if li>1 else "1", i+1) for i,li in enumerate(l)]
def R(i,k):
    return "*".join("(u^%d*x%d-x%d)"%(k,i,j) for j in (1,2,3) if j!=i)
IDX={3:"[4,2,0]",5:"[5,3,0,0,0]",7:"[6,4,0,0,0,0,0]",9:"[7,5,0,0,0,0,0,0,0]"}
edges=[((1,1,1),(3,1,1),1,3),((3,1,1),(5,1,1),1,5),((3,1,1),(3,3,1),2,3),
       ((5,1,1),(7,1,1),1,7),((5,1,1),(5,3,1),2,3),((3,3,1),(5,3,1),1,5),((3,3,1),(3,3,3),3,3)]
for a,b,i,k in edges:
    na,nb=sum(a),sum(b)
    nm="rho-%s-%s"%("".join(map(str,a)),"".join(map(str,b)))
    extra={"slow":True} if nb==9 else {}
    add(nm,"explicit","MS on X_%s against R_%d;%d times MS on X_%s"%("".join(map(str,b)),i,k,"".join(map(str,a))),
        spec="t=u; q=u^-2", vars=["x1","x2","x3"],
        lhs=B("MS",IDX[nb],X(b)),
        rhs={"product":[R(i,k),B("MS",IDX[na],X(a))]}, **extra)

# nonsymmetric
add("nonsym-E210","explicit","E_210 at t=u, q=u^-2",spec="t=u; q=u^-2",vars=["x1","x2","x3"],
    lhs=B("E","[2,1,0]"),rhs="(u*x2-x1)*(u*x3-x1)*(u*x3-x2)")
add("nonsym-E630","explicit","E_630 at t=u^3, q=u^-2",spec="t=u^3; q=u^-2",vars=["x1","x2","x3"],
    lhs=B("E","[6,3,0]"),
    rhs="(x2*u-x3)*(-u*x3+x2)*(x2-u^3*x3)*(x1*u-x3)*(-u*x3+x1)*(x1-u^3*x3)*(x1*u-x2)*(x1-x2*u)*(x1-x2*u^3)")
add("nonsym-E420","explicit","E_420 at q=-1/t",spec="t=u; q=-u^-1",vars=["x1","x2","x3"],
    lhs=B("E","[4,2,0]"),rhs="t*(x2+x3)*(-t*x3+x2)*(x3+x1)*(-t*x3+x1)*(x1+x2)*(x1-x2*t)")
add("nonsym-E221100","explicit","E_221100(x1,x2,y1,ty1,y2,ty2) at q=t^-3",spec="t=u; q=u^-3",vars=["x1","x2","y1","y2"],
    lhs=B("E","[2,2,1,1,0,0]",["x1","x2","y1","t*y1","y2","t*y2"]),
    rhs="(y1-y2*t^2)*(y1-y2*t)*(x2-y2*t^2)*(x2-t^2*y1)*(x1-y2*t^2)*(x1-t^2*y1)")
add("nonsym-E42200","explicit","E_42200(x1,y1,u^2y1,y2,u^2y2) at t=u^2, q=u^-3",spec="t=u^2; q=u^-3",vars=["x1","y1","y2"],
    lhs=B("E","[4,2,2,0,0]",["x1","y1","u^2*y1","y2","u^2*y2"]),
    rhs="(y1-y2*u^4)*(y1-y2*u)*(y1*u-y2)*(y1-y2*u^2)*(x1-y2*u^4)*(x1-y2*u)*(x1-y1*u^4)*(x1-y1*u)")
add("nonsym-E0022","explicit","E_0022(ty,y,x3,x4) at q=t^-3",spec="t=u; q=u^-3",vars=["y","x3","x4"],
    lhs=B("E","[0,0,2,2]",["t*y","y","x3","x4"]),rhs="(t*x4-y)*(t*x3-y)*x4*x3")
add("nonsym-M0022","explicit","M_0022(ty,y,x3,x4) at q=t^-3",spec="t=u; q=u^-3",vars=["y","x3","x4"],
    lhs=B("M","[0,0,2,2]",["t*y","y","x3","x4"]),rhs="(t*x4-y)*(t*x3-y)*(x4-1)*(x3-1)")
add("nonsym-E0022-vs-M0022","explicit","E_0022 and M_0022 differ at this point",spec="t=u; q=u^-3",vars=["y","x3","x4"],
    lhs=B("E","[0,0,2,2]",["t*y","y","x3","x4"]),rhs=B("M","[0,0,2,2]",["t*y","y","x3","x4"]),expect="fail")
add("nonsym-E1100","explicit","E_1100(ty,y,x3,x4) at q=t^-3",spec="t=u; q=u^-3",vars=["y","x3","x4"],
    lhs=B("E","[1,1,0,0]",["t*y","y","x3","x4"]),rhs="(t*x4-y)*(t*x3-y)")
add("nonsym-E1010","explicit","E_1010(ty,x2,y,x4) at q=t^-3",spec="t=u; q=u^-3",vars=["y","x2","x4"],
    lhs=B("E","[1,0,1,0]",["t*y","x2","y","x4"]),rhs="(t*x4-y)*(x2-y)")
add("nonsym-E1010-printed","explicit","the product (t x4 - y)(t x2 - y) does not match at this point",spec="t=u; q=u^-3",vars=["y","x2","x4"],
    lhs=B("E","[1,0,1,0]",["t*y","x2","y","x4"]),rhs="(t*x4-y)*(t*x2-y)",expect="fail")
add("nonsym-E420-q-minus-t","explicit","at q=-t the six-factor product does not match",spec="t=u; q=-u",vars=["x1","x2","x3"],
    lhs=B("E","[4,2,0]"),rhs="t*(x2+x3)*(-t*x3+x2)*(x3+x1)*(-t*x3+x1)*(x1+x2)*(x1-x2*t)",expect="fail")
add("nonsym-E32000","explicit","E_32000(x1,x2,y,ty,t^2y) at q=t^-2",spec="t=u; q=u^-2",vars=["x1","x2","y"],
    lhs=B("E","[3,2,0,0,0]",["x1","x2","y","t*y","t^2*y"]),
    rhs="(x2-y*t^3)*(x2-t*y)*(x1-y*t^3)*(x1-t*y)*(x1-t*x2)")
add("nonsym-E4300000","explicit","E_4300000(x1,x2,y,...,t^4y) at q=t^-2",spec="t=u; q=u^-2",vars=["x1","x2","y"],
    lhs=B("E","[4,3,0,0,0,0,0]",["x1","x2","y","t*y","t^2*y","t^3*y","t^4*y"]),
    rhs="(x2-t*y)*(x2-y*t^3)*(x2-y*t^5)*(x1-y*t^3)*(x1-y*t^5)*(x1-t*y)*(x1-t*x2)")
add("nonsym-E4300000-two-clusters","explicit","E_4300000(x1,t^2y1,y1,ty1,y2,ty2,t^2y2) at q=t^-2",spec="t=u; q=u^-2",vars=["x1","y1","y2"],
    lhs=B("E","[4,3,0,0,0,0,0]",["x1","t^2*y1","y1","t*y1","y2","t*y2","t^2*y2"]),
    rhs="(y1-t*y2)*(y1-t^3*y2)*(t*y1-y2)*(x1-t*y2)*(x1-t^3*y2)*(x1-t*y1)*(x1-t^3*y1)")
json.dump(C,open(os.path.join(os.path.dirname(__file__),"..","corpus","identities.json"),"w"),indent=1)
print(len(C))
