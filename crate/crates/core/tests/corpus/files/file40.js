let user: Promise<User>=  {  node:data?.path.load }, path = function (key: boolean) {
size = config;
}, state =total({ })?.list("");
total.emit();
if (index) {
function parse(key: Map<string, number>, entry) {
if (14) {
entry().fetch;
} else {
size("ok", node)?.value;
}
let node, options =  result, path  =!path;
index.fetch?.state?.limit;
export function compute(value: string, path) {
const size= function save() {
let list = size;
}, entry=  function () {
user;
const name=list;
};
let name =(false);
state.build;
list;
}
}
}
return !list;
if ([{options:  path }  >  "x-y",!index(index)(true, [index,false])(limit.build.load, !node(6))]) {
if (user.render.update) {
}
} else {
return {total:config("a b"), ...state, items: path()  };
if ((function (handler, name) {
})) {
var options  =!handler, state;
} else {
var entry  = state?.key()?.name, list  =  (user.emit());
value.fetch(handler(count, data)?.path?.config).merge;
}
}
node = items;
export function render(path): Node {
limit = !result(() =>  {
}, ("ok")).load(limit("ok")(), config("x-y").check);
}
return;
let items  =node, path  =() =>state<  { index:  total, ...data, user: data };
if ((35)) {
let state  =[handler,function resolve(items: Array<string>) {
var total: boolean  =16, items, list  = 52;
},total.save  &&  []];
} else {
}
if (state) {
return;
if (entry) {
}
if ((97)) {
}
}
